#include "report.hpp"

#include <sstream>

#include "histograph/collection_io.hpp"
#include "histograph/tables.hpp"
#include "histograph/text.hpp"

namespace histograph {

namespace {

constexpr const char* kStyle =
    "body{font-family:sans-serif;margin:2em;color:#222}"
    "table{border-collapse:collapse;margin:0.5em 0 1.5em}"
    "th,td{border:1px solid #bbb;padding:2px 6px;text-align:left;font-size:13px}"
    "th{background:#eef2f7}"
    "p.note{margin:0.2em 0;font-size:13px}";

void table_html(std::ostringstream& out, const std::string& title, const Table& t) {
  out << "<h2>" << text::xml_escape(title) << "</h2>\n";
  for (const auto& line : t.preamble) out << "<p class=\"note\">" << text::xml_escape(line) << "</p>\n";
  out << "<table>\n<tr>";
  for (const auto& c : t.columns) out << "<th>" << text::xml_escape(c) << "</th>";
  out << "</tr>\n";
  for (const auto& row : t.rows) {
    out << "<tr>";
    for (const auto& c : row) out << "<td>" << text::xml_escape(cell_text(c)) << "</td>";
    out << "</tr>\n";
  }
  out << "</table>\n";
}

}  // namespace

std::string emit_report(const Collection& c, const CitationGraph& g, const ReportOptions& options) {
  const auto nodes = node_indicators(c, g, options.window);
  const auto window = resolve_window(c, options.window);
  const auto matrix = citation_matrix(c, g);
  const auto authors = author_table(c, nodes, AuthorSortKey::tlcs_t);
  const auto sources = source_table(c, nodes, SourceSortKey::pubs);
  const auto missing = find_missing_links(c, g, options.page_tolerance);
  const auto outer = outer_references(g);
  const auto demography = classify_authors(c, author_table(c, nodes, AuthorSortKey::tlcs));
  const auto selection = select_subgraph(g, nodes, options.threshold, options.scope);
  const auto spec = layout_yearly(selection, c, g, options.threshold, options.scope);
  const auto path = main_path(c, g);

  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out << "<title>Historiograph report</title>\n<style>" << kStyle << "</style>\n</head>\n<body>\n";
  out << "<h1>Historiograph report</h1>\n";
  if (!c.query_label().empty()) out << "<p class=\"note\">Query: " << text::xml_escape(c.query_label()) << "</p>\n";
  if (c.download_date()) {
    out << "<p class=\"note\">Downloaded: " << format_iso_date(*c.download_date()) << "</p>\n";
  }
  if (auto span = c.year_span()) {
    out << "<p class=\"note\">Years: " << span->first << "-" << span->last << "; reference year " << window.ref_year
        << "; cutoffs b " << window.cutoff_b << ", e " << window.cutoff_e << "</p>\n";
  }
  out << "<p class=\"note\"><strong>" << text::xml_escape(matrix.header()) << "</strong></p>\n";

  table_html(out, "Citation matrix", matrix_table(matrix));
  table_html(out, "Ranked author list",
             author_list_table(authors, collection_totals(nodes, authors.size()), AuthorSortKey::tlcs_t, options.top));
  table_html(out, "Ranked source list",
             source_list_table(sources, collection_totals(nodes, sources.size()), SourceSortKey::pubs, options.top));
  table_html(out, "Missing links", missing_links_table(c, missing));
  table_html(out, "Outer references", outer_references_table(outer, options.top));
  table_html(out, "Author demography", demography_table(demography));

  out << "<h2>Main path</h2>\n<p class=\"note\">";
  if (path.empty()) {
    out << "No citation runs across years.";
  } else {
    for (std::size_t i = 0; i < path.size(); ++i) {
      const auto& r = c.node(path[i]);
      out << (i ? " &#8594; " : "") << path[i] << " (" << r.pub_year << " " << text::xml_escape(r.first_author())
          << ")";
    }
  }
  out << "</p>\n";

  out << "<h2>Historiograph</h2>\n";
  // the SVG goes in without its XML declaration
  auto svg = emit_svg(spec);
  if (auto at = svg.find("<svg"); at != std::string::npos) svg.erase(0, at);
  out << svg;
  out << "</body>\n</html>\n";
  return out.str();
}

}  // namespace histograph
