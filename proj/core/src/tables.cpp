#include "histograph/tables.hpp"

#include <algorithm>

#include <json.hpp>

#include "histograph/error.hpp"
#include "histograph/text.hpp"

namespace histograph {

namespace {

using json = nlohmann::ordered_json;

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string join_ids(const std::vector<NodeId>& ids) {
  std::string out;
  for (NodeId id : ids) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(id);
  }
  return out;
}

std::string flatten(std::string_view s) {
  std::string out(s);
  std::replace_if(out.begin(), out.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return out;
}

std::size_t limit(std::size_t size, std::size_t top) { return top == 0 ? size : std::min(size, top); }

}  // namespace

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return text::format_fixed2(*d);
  return flatten(std::get<std::string>(c));
}

std::string render_tsv(const Table& t) {
  std::string out;
  for (const auto& line : t.preamble) out += flatten(line) + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "\t" : "") + flatten(t.columns[i]);
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + cell_text(row[i]);
    out += "\n";
  }
  return out;
}

std::string render_json(const Table& t) {
  json doc;
  doc["format_version"] = kTableFormatVersion;
  doc["kind"] = t.kind;
  doc["header"] = t.preamble;
  doc["columns"] = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& c : row) std::visit([&](const auto& v) { r.push_back(v); }, c);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string describe_record(const SourceRecord& r) {
  std::string out = std::to_string(r.pub_year) + " " + r.source;
  if (r.volume || r.begin_page) out += " ";
  if (r.volume) out += *r.volume;
  if (r.volume && r.issue) out += "(" + *r.issue + ")";
  if (r.begin_page) {
    out += ":" + *r.begin_page;
    if (r.end_page) out += "-" + *r.end_page;
  }
  return out;
}

const char* sort_label(AuthorSortKey k) {
  switch (k) {
    case AuthorSortKey::name: return "Name";
    case AuthorSortKey::tlcs: return "TLCS";
    case AuthorSortKey::tlcs_t: return "TLCS/t";
    case AuthorSortKey::tgcs: return "TGCS";
    case AuthorSortKey::tgcs_t: return "TGCS/t";
    case AuthorSortKey::tlcs_b: return "TLCSb";
    case AuthorSortKey::tlcs_e: return "TLCSe";
    case AuthorSortKey::pubs: return "Pubs";
    case AuthorSortKey::tlcr: return "TLCR";
  }
  return "?";
}

const char* sort_label(SourceSortKey k) {
  switch (k) {
    case SourceSortKey::name: return "Name";
    case SourceSortKey::tlcs: return "TLCS";
    case SourceSortKey::tgcs: return "TGCS";
    case SourceSortKey::pubs: return "Pubs";
  }
  return "?";
}

AuthorSortKey parse_author_sort_key(std::string_view s) {
  const auto want = text::to_upper(s);
  for (auto k : {AuthorSortKey::name, AuthorSortKey::tlcs, AuthorSortKey::tlcs_t, AuthorSortKey::tgcs,
                 AuthorSortKey::tgcs_t, AuthorSortKey::tlcs_b, AuthorSortKey::tlcs_e, AuthorSortKey::pubs,
                 AuthorSortKey::tlcr}) {
    if (text::to_upper(sort_label(k)) == want) return k;
  }
  throw DataError("unknown author sort key '" + std::string(s) + "'");
}

SourceSortKey parse_source_sort_key(std::string_view s) {
  const auto want = text::to_upper(s);
  for (auto k : {SourceSortKey::name, SourceSortKey::tlcs, SourceSortKey::tgcs, SourceSortKey::pubs}) {
    if (text::to_upper(sort_label(k)) == want) return k;
  }
  throw DataError("unknown source sort key '" + std::string(s) + "'");
}

Table matrix_table(const CitationMatrix& m) {
  Table t;
  t.kind = "citation_matrix";
  t.preamble = {m.header(), "Sorted by year, source, volume, issue, page."};
  t.columns = {"cited nodes", "LCR", "NCR", "Nodes", "LCS", "GCS", "citing nodes"};
  for (const auto& r : m.rows) {
    t.rows.push_back({join_ids(r.cited), as_int(r.lcr), as_int(r.ncr), r.label, as_int(r.lcs), r.gcs,
                      join_ids(r.citing)});
  }
  return t;
}

Table author_list_table(const std::vector<AuthorMetrics>& rows, const Totals& totals, AuthorSortKey key,
                        std::size_t top) {
  Table t;
  t.kind = "author_list";
  t.preamble = {totals_header("Total", totals), std::string("Sorted by ") + sort_label(key) + "."};
  t.columns = {"#", "Name", "TLCS", "TLCS/t", "TGCS", "TGCS/t", "TLCSb", "TLCSe", "Pubs", "TLCR"};
  for (std::size_t i = 0; i < limit(rows.size(), top); ++i) {
    const auto& a = rows[i];
    t.rows.push_back({as_int(i + 1), a.name, as_int(a.tlcs), a.tlcs_t, a.tgcs, a.tgcs_t, as_int(a.tlcs_b),
                      as_int(a.tlcs_e), as_int(a.pubs), as_int(a.tlcr)});
  }
  return t;
}

Table source_list_table(const std::vector<SourceMetrics>& rows, const Totals& totals, SourceSortKey key,
                        std::size_t top) {
  Table t;
  t.kind = "source_list";
  t.preamble = {totals_header("Total", totals), std::string("Sorted by ") + sort_label(key) + "."};
  t.columns = {"#", "Name", "TLCS", "TGCS", "Pubs"};
  for (std::size_t i = 0; i < limit(rows.size(), top); ++i) {
    const auto& s = rows[i];
    t.rows.push_back({as_int(i + 1), s.name, as_int(s.tlcs), s.tgcs, as_int(s.pubs)});
  }
  return t;
}

Table missing_links_table(const Collection& c, const std::vector<MissingLink>& links) {
  Table t;
  t.kind = "missing_links";
  std::vector<NodeId> citing;
  for (const auto& l : links) citing.push_back(l.citing);
  std::sort(citing.begin(), citing.end());
  citing.erase(std::unique(citing.begin(), citing.end()), citing.end());
  t.preamble = {std::to_string(citing.size()) + " nodes have citations that may potentially refer to other nodes."};
  t.columns = {"citing node", "citing record", "authors", "reference", "candidate node", "candidate record"};
  for (const auto& l : links) {
    const auto& from = c.node(l.citing);
    const auto& to = c.node(l.candidate);
    std::string authors;
    for (const auto& a : from.authors) authors += (authors.empty() ? "" : "; ") + a;
    t.rows.push_back({static_cast<std::int64_t>(l.citing), describe_record(from), authors, l.ref.raw,
                      static_cast<std::int64_t>(l.candidate), describe_record(to)});
  }
  return t;
}

Table outer_references_table(const std::vector<OuterReference>& rows, std::size_t top) {
  Table t;
  t.kind = "outer_references";
  t.preamble = {"Total: " + std::to_string(rows.size()) + (top && top < rows.size() ? " (top shown)." : "."),
                "Sorted by LCS."};
  t.columns = {"#", "LCS", "Reference"};
  for (std::size_t i = 0; i < limit(rows.size(), top); ++i) {
    t.rows.push_back({as_int(i + 1), as_int(rows[i].citing_records), rows[i].label()});
  }
  return t;
}

Table reference_levels_table(NodeId node, const std::vector<std::vector<NodeId>>& levels) {
  Table t;
  t.kind = "reference_levels";
  t.preamble = {"Node: " + std::to_string(node)};
  t.columns = {"level", "size", "nodes"};
  for (std::size_t i = 0; i < levels.size(); ++i) {
    t.rows.push_back({as_int(i), as_int(levels[i].size()), join_ids(levels[i])});
  }
  return t;
}

Table demography_table(const std::vector<AuthorClass>& rows) {
  Table t;
  t.kind = "demography";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : rows) ++counts[static_cast<int>(r.demography)];
  t.preamble = {"Authors: " + std::to_string(rows.size()) + ", core: " + std::to_string(counts[0]) +
                ", continuant: " + std::to_string(counts[1]) + ", transient: " + std::to_string(counts[2])};
  t.columns = {"#", "Name", "Class", "Years", "TLCS"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::string years;
    for (Year y : r.years) years += (years.empty() ? "" : " ") + std::to_string(y);
    t.rows.push_back({as_int(i + 1), r.name, std::string(to_string(r.demography)), years, as_int(r.tlcs)});
  }
  return t;
}

Table frequency_table(const FrequencyDistribution& d) {
  Table t;
  t.kind = "journal_frequency";
  t.preamble = {"Journals: " + std::to_string(d.total_journals()) + ", papers: " + std::to_string(d.total_papers())};
  t.columns = {"r", "f_r"};
  for (const auto& [r, f] : d.counts()) t.rows.push_back({as_int(r), as_int(f)});
  return t;
}

Table brookes_table(const FrequencyDistribution& d, std::optional<std::int64_t> actual) {
  const auto p = kendall_prediction(d);
  Table t;
  t.kind = "brookes_estimate";
  std::string sum;
  for (const auto& [r, f] : d.counts()) {
    if (!sum.empty()) sum += r % 2 == 1 ? " + " : " - ";
    else if (r % 2 == 0) sum += "-";
    sum += std::to_string(f);
  }
  t.preamble = {"M = " + sum + " = " + std::to_string(p.additional)};
  t.columns = {"quantity", "value"};
  t.rows.push_back({std::string("observed journals"), as_int(p.observed)});
  t.rows.push_back({std::string("M"), p.additional});
  t.rows.push_back({std::string("predicted journals"), p.predicted});
  if (actual) {
    t.rows.push_back({std::string("actual journals"), *actual});
    t.rows.push_back({std::string("error %"), 100.0 * prediction_error(p.predicted, *actual)});
  }
  return t;
}

Table augment_table(const std::vector<OuterReference>& selected, std::size_t considered, Year target_year) {
  Table t;
  t.kind = "augment_8020";
  t.preamble = {"Year: " + std::to_string(target_year) + ", considered: " + std::to_string(considered) +
                ", selected: " + std::to_string(selected.size())};
  t.columns = {"#", "LCS", "Reference"};
  for (std::size_t i = 0; i < selected.size(); ++i) {
    t.rows.push_back({as_int(i + 1), as_int(selected[i].citing_records), selected[i].label()});
  }
  return t;
}

Table weibull_table(const WeibullFit& fit) {
  Table t;
  t.kind = "weibull_fit";
  t.preamble = {fit.converged ? "converged" : "iteration limit reached"};
  t.columns = {"shape", "scale", "log_likelihood", "events", "censored", "iterations"};
  t.rows.push_back({fit.shape, fit.scale, fit.log_likelihood, as_int(fit.n_events), as_int(fit.n_censored),
                    static_cast<std::int64_t>(fit.iterations)});
  return t;
}

}  // namespace histograph
