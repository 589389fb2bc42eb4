#include "cli.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "histograph/collection_io.hpp"
#include "histograph/error.hpp"
#include "histograph/historiograph.hpp"
#include "histograph/indicators.hpp"
#include "histograph/ingest.hpp"
#include "histograph/linker.hpp"
#include "histograph/sampling.hpp"
#include "histograph/tables.hpp"
#include "histograph/text.hpp"
#include "histograph/weibull.hpp"
#include "report.hpp"

namespace histograph::cli {

namespace {

// Bad flag combinations found after CLI11 has accepted the syntax.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string out_path;
  std::optional<int> ref_year;
  std::optional<int> cutoff_b;
  std::optional<int> cutoff_e;
  std::int64_t threshold = 0;
  std::string scope = "global";
  std::string format;
  std::size_t top = 0;
  int page_tolerance = kDefaultPageTolerance;
  std::string sort;
  std::string query_label;
  std::string download_date;
  unsigned node = 0;
  std::size_t depth = 0;
  int year = 0;
  std::optional<std::int64_t> actual;
  std::optional<int> window_end;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw DataError("cannot read '" + path + "'");
  return ss.str();
}

// A collection document, or raw export text when the file does not start with '{'.
Collection load_collection(const std::string& path, std::ostream& err) {
  const auto body = read_file(path);
  auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '{') return parse_collection(body);
  auto parsed = parse_export(body);
  for (const auto& w : parsed.warnings) err << "histograph: warning: " << path << ": " << w << "\n";
  return std::move(parsed.collection);
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out_path.empty() || cfg.out_path == "-") {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw DataError("cannot write '" + cfg.out_path + "'");
  f << payload;
  if (!f.flush()) throw DataError("cannot write '" + cfg.out_path + "'");
}

std::string render(const Table& t, const std::string& format) {
  if (format.empty() || format == "tsv") return render_tsv(t);
  if (format == "structured" || format == "json") return render_json(t);
  throw UsageError("format '" + format + "' does not apply to this command (use tsv or structured)");
}

IndicatorWindow window_of(const RunConfig& cfg) {
  if (cfg.cutoff_b && cfg.cutoff_e && *cfg.cutoff_b > *cfg.cutoff_e) {
    throw UsageError("--b must not be later than --e");
  }
  return IndicatorWindow{cfg.ref_year, cfg.cutoff_b, cfg.cutoff_e};
}

ThresholdScope scope_of(const RunConfig& cfg) {
  return cfg.scope == "local" ? ThresholdScope::local : ThresholdScope::global;
}

struct Loaded {
  Collection collection;
  CitationGraph graph;
};

Loaded load_linked(const RunConfig& cfg, std::ostream& err) {
  Loaded l{load_collection(cfg.inputs.at(0), err), {}};
  l.graph = link_citations(l.collection);
  return l;
}

std::string cmd_ingest(const RunConfig& cfg, std::ostream& err) {
  Provenance prov;
  prov.query_label = cfg.query_label;
  if (!cfg.download_date.empty()) {
    try {
      prov.download_date = parse_iso_date(cfg.download_date);
    } catch (const DataError& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<SourceRecord> records;
  for (const auto& path : cfg.inputs) {
    auto body = read_file(path);
    ParsedExport parsed;
    try {
      parsed = parse_export(body, ParseOptions{prov});
    } catch (const ParseError& e) {
      throw DataError(path + ": " + e.what());
    }
    for (const auto& w : parsed.warnings) err << "histograph: warning: " << path << ": " << w << "\n";
    records.insert(records.end(), parsed.collection.records().begin(), parsed.collection.records().end());
  }
  return serialize_collection(Collection(std::move(records), prov));
}

std::string cmd_merge(const RunConfig& cfg, std::ostream& err) {
  Collection merged = load_collection(cfg.inputs.at(0), err);
  for (std::size_t i = 1; i < cfg.inputs.size(); ++i) {
    merged = merge_collections(merged, load_collection(cfg.inputs[i], err));
  }
  return serialize_collection(merged);
}

std::string cmd_graph(const RunConfig& cfg, std::ostream& err) {
  auto l = load_linked(cfg, err);
  const auto nodes = node_indicators(l.collection, l.graph, window_of(cfg));
  const auto scope = scope_of(cfg);
  const auto spec = layout_yearly(select_subgraph(l.graph, nodes, cfg.threshold, scope), l.collection, l.graph,
                                  cfg.threshold, scope);
  if (cfg.format.empty() || cfg.format == "dot") return emit_dot(spec);
  if (cfg.format == "svg") return emit_svg(spec);
  throw UsageError("graph supports --format dot or svg");
}

std::string cmd_mainpath(const RunConfig& cfg, std::ostream& err) {
  auto l = load_linked(cfg, err);
  const auto flow = flow_dag(l.collection, l.graph);
  const auto spc = search_path_counts(l.collection.size(), flow);
  const auto path = main_path(l.collection.size(), flow);
  Table t;
  t.kind = "main_path";
  double total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto it = std::lower_bound(spc.edges.begin(), spc.edges.end(), Edge{path[i], path[i + 1]});
    total += spc.weight[static_cast<std::size_t>(it - spc.edges.begin())];
  }
  t.preamble = {"Source-sink paths: " + text::format_fixed2(spc.total_paths) +
                ", path weight: " + text::format_fixed2(total)};
  t.columns = {"step", "node", "year", "first author"};
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& r = l.collection.node(path[i]);
    t.rows.push_back({static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(path[i]),
                      static_cast<std::int64_t>(r.pub_year), r.first_author()});
  }
  return render(t, cfg.format);
}

std::string cmd_report(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.format.empty() && cfg.format != "html") throw UsageError("report only supports --format html");
  auto l = load_linked(cfg, err);
  ReportOptions opt;
  opt.window = window_of(cfg);
  opt.threshold = cfg.threshold;
  opt.scope = scope_of(cfg);
  opt.top = cfg.top == 0 ? 30 : cfg.top;
  opt.page_tolerance = cfg.page_tolerance;
  return emit_report(l.collection, l.graph, opt);
}

void paint(std::ostream& err, bool color, const char* level, const char* ansi, const std::string& msg) {
  err << "histograph: ";
  if (color) {
    err << ansi << level << "\x1b[0m";
  } else {
    err << level;
  }
  err << ": " << msg << "\n";
}

}  // namespace

bool stderr_wants_color() {
  if (std::getenv("HISTOGRAPH_NO_COLOR") != nullptr) return false;
  return ::isatty(::fileno(stderr)) != 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color) {
  RunConfig cfg;
  CLI::App app{"Citation historiography toolkit", "histograph"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto inputs = [&](CLI::App* sub, const char* what, bool many) {
    auto* opt = sub->add_option("inputs", cfg.inputs, what)->required()->check(CLI::ExistingFile);
    if (!many) opt->expected(1);
    else opt->expected(1, -1);
  };
  auto out_flag = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "Write here instead of stdout"); };
  auto fmt_flag = [&](CLI::App* sub, const char* choices) {
    sub->add_option("--format", cfg.format, choices);
  };
  auto window_flags = [&](CLI::App* sub) {
    sub->add_option("--ref-year", cfg.ref_year, "Year ages are reckoned to (default: last year)");
    sub->add_option("--b", cfg.cutoff_b, "LCSb cutoff year (default: first year)");
    sub->add_option("--e", cfg.cutoff_e, "LCSe cutoff year (default: last year)");
  };
  auto threshold_flags = [&](CLI::App* sub) {
    sub->add_option("--threshold", cfg.threshold, "Minimum citation score")->check(CLI::NonNegativeNumber);
    sub->add_option("--scope", cfg.scope, "local (LCS) or global (GCS)")->check(CLI::IsMember({"local", "global"}));
  };

  auto* ingest = app.add_subcommand("ingest", "Parse export files into a collection document");
  inputs(ingest, "Export files", true);
  ingest->add_option("--query-label", cfg.query_label, "Provenance: the search that produced the export");
  ingest->add_option("--download-date", cfg.download_date, "Provenance: YYYY-MM-DD");
  out_flag(ingest);

  auto* merge = app.add_subcommand("merge", "Union of collections");
  inputs(merge, "Collections", true);
  out_flag(merge);

  auto* matrix = app.add_subcommand("matrix", "Citation matrix");
  inputs(matrix, "Collection", false);
  fmt_flag(matrix, "tsv or structured");
  out_flag(matrix);

  auto* authors = app.add_subcommand("authors", "Ranked author list");
  inputs(authors, "Collection", false);
  window_flags(authors);
  authors->add_option("--sort", cfg.sort, "Sort column (default TLCS/t)");
  authors->add_option("--top", cfg.top, "Keep the first N rows");
  fmt_flag(authors, "tsv or structured");
  out_flag(authors);

  auto* sources = app.add_subcommand("sources", "Ranked source list");
  inputs(sources, "Collection", false);
  window_flags(sources);
  sources->add_option("--sort", cfg.sort, "Sort column (default Pubs)");
  sources->add_option("--top", cfg.top, "Keep the first N rows");
  fmt_flag(sources, "tsv or structured");
  out_flag(sources);

  auto* graph = app.add_subcommand("graph", "Year-by-year historiograph");
  inputs(graph, "Collection", false);
  threshold_flags(graph);
  window_flags(graph);
  fmt_flag(graph, "dot or svg");
  out_flag(graph);

  auto* mainpath = app.add_subcommand("mainpath", "Main path by search path counts");
  inputs(mainpath, "Collection", false);
  fmt_flag(mainpath, "tsv or structured");
  out_flag(mainpath);

  auto* missing = app.add_subcommand("missing", "Potentially missing links");
  inputs(missing, "Collection", false);
  missing->add_option("--page-tolerance", cfg.page_tolerance, "Largest page distance")->check(CLI::NonNegativeNumber);
  fmt_flag(missing, "tsv or structured");
  out_flag(missing);

  auto* outer = app.add_subcommand("outer", "Cited references outside the collection");
  inputs(outer, "Collection", false);
  outer->add_option("--top", cfg.top, "Keep the first N rows");
  fmt_flag(outer, "tsv or structured");
  out_flag(outer);

  auto* levels = app.add_subcommand("levels", "Cumulative reference levels of a node");
  inputs(levels, "Collection", false);
  levels->add_option("--node", cfg.node, "Node id")->required()->check(CLI::PositiveNumber);
  levels->add_option("--depth", cfg.depth, "Last level (default 0)");
  fmt_flag(levels, "tsv or structured");
  out_flag(levels);

  auto* demography = app.add_subcommand("demography", "Core, continuant and transient authors");
  inputs(demography, "Collection", false);
  window_flags(demography);
  fmt_flag(demography, "tsv or structured");
  out_flag(demography);

  auto* sample = app.add_subcommand("sample", "Journal productivity sampling");
  sample->require_subcommand(1);
  auto* freq = sample->add_subcommand("freq", "Journal frequency distribution");
  inputs(freq, "Collection", false);
  fmt_flag(freq, "tsv or structured");
  out_flag(freq);
  auto* brookes = sample->add_subcommand("brookes", "Brookes estimate of additional journals");
  inputs(brookes, "Collection", false);
  brookes->add_option("--actual", cfg.actual, "Observed journal count for the doubled period");
  fmt_flag(brookes, "tsv or structured");
  out_flag(brookes);
  auto* augment = sample->add_subcommand("augment", "80/20 selection of outer references");
  inputs(augment, "Collection", false);
  augment->add_option("--year", cfg.year, "Cited year to select")->required();
  fmt_flag(augment, "tsv or structured");
  out_flag(augment);

  auto* weibull = app.add_subcommand("weibull", "Censored Weibull fit of first-citation ages");
  inputs(weibull, "Collection", false);
  weibull->add_option("--window-end", cfg.window_end, "Last year of observation (default: last year)");
  fmt_flag(weibull, "tsv or structured");
  out_flag(weibull);

  auto* report = app.add_subcommand("report", "Static HTML report");
  inputs(report, "Collection", false);
  window_flags(report);
  threshold_flags(report);
  report->add_option("--top", cfg.top, "Rows per ranked list (default 30)");
  report->add_option("--page-tolerance", cfg.page_tolerance, "Largest page distance")->check(CLI::NonNegativeNumber);
  fmt_flag(report, "html");
  out_flag(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    paint(err, color, "usage", "\x1b[33m", e.what());
    return kExitUsage;
  }

  try {
    std::string payload;
    if (ingest->parsed()) {
      payload = cmd_ingest(cfg, err);
    } else if (merge->parsed()) {
      payload = cmd_merge(cfg, err);
    } else if (matrix->parsed()) {
      auto l = load_linked(cfg, err);
      payload = render(matrix_table(citation_matrix(l.collection, l.graph)), cfg.format);
    } else if (authors->parsed()) {
      auto l = load_linked(cfg, err);
      const auto key = cfg.sort.empty() ? AuthorSortKey::tlcs_t : parse_author_sort_key(cfg.sort);
      const auto nodes = node_indicators(l.collection, l.graph, window_of(cfg));
      const auto rows = author_table(l.collection, nodes, key);
      payload = render(author_list_table(rows, collection_totals(nodes, rows.size()), key, cfg.top), cfg.format);
    } else if (sources->parsed()) {
      auto l = load_linked(cfg, err);
      const auto key = cfg.sort.empty() ? SourceSortKey::pubs : parse_source_sort_key(cfg.sort);
      const auto nodes = node_indicators(l.collection, l.graph, window_of(cfg));
      const auto rows = source_table(l.collection, nodes, key);
      payload = render(source_list_table(rows, collection_totals(nodes, rows.size()), key, cfg.top), cfg.format);
    } else if (graph->parsed()) {
      payload = cmd_graph(cfg, err);
    } else if (mainpath->parsed()) {
      payload = cmd_mainpath(cfg, err);
    } else if (missing->parsed()) {
      auto l = load_linked(cfg, err);
      payload = render(missing_links_table(l.collection, find_missing_links(l.collection, l.graph, cfg.page_tolerance)),
                       cfg.format);
    } else if (outer->parsed()) {
      auto l = load_linked(cfg, err);
      payload = render(outer_references_table(outer_references(l.graph), cfg.top), cfg.format);
    } else if (levels->parsed()) {
      auto l = load_linked(cfg, err);
      payload = render(reference_levels_table(cfg.node, reference_levels(l.graph, cfg.node, cfg.depth)), cfg.format);
    } else if (demography->parsed()) {
      auto l = load_linked(cfg, err);
      const auto nodes = node_indicators(l.collection, l.graph, window_of(cfg));
      payload = render(demography_table(classify_authors(l.collection, author_table(l.collection, nodes,
                                                                                    AuthorSortKey::tlcs))),
                       cfg.format);
    } else if (freq->parsed()) {
      payload = render(frequency_table(journal_frequency(load_collection(cfg.inputs.at(0), err))), cfg.format);
    } else if (brookes->parsed()) {
      payload = render(brookes_table(journal_frequency(load_collection(cfg.inputs.at(0), err)), cfg.actual),
                       cfg.format);
    } else if (augment->parsed()) {
      auto l = load_linked(cfg, err);
      const auto outer_rows = outer_references(l.graph);
      payload = render(augment_table(augment_8020(outer_rows, cfg.year), count_for_year(outer_rows, cfg.year),
                                     cfg.year),
                       cfg.format);
    } else if (weibull->parsed()) {
      auto l = load_linked(cfg, err);
      const auto ages = citation_ages(l.collection, l.graph, cfg.window_end);
      payload = render(weibull_table(weibull_fit(ages)), cfg.format);
    } else if (report->parsed()) {
      payload = cmd_report(cfg, err);
    }
    emit(cfg, out, payload);
    return kExitOk;
  } catch (const UsageError& e) {
    paint(err, color, "usage", "\x1b[33m", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    paint(err, color, "error", "\x1b[31m", e.what());
    return kExitData;
  } catch (const DataError& e) {
    paint(err, color, "error", "\x1b[31m", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    paint(err, color, "error", "\x1b[31m", e.what());
    return kExitData;
  }
}

}  // namespace histograph::cli
