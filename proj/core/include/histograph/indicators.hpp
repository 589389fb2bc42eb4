#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "histograph/linker.hpp"
#include "histograph/record.hpp"

namespace histograph {

/// User-facing window settings; unset fields take collection defaults.
struct IndicatorWindow {
  std::optional<Year> ref_year;  // default: max pub_year
  std::optional<Year> cutoff_b;  // default: min pub_year
  std::optional<Year> cutoff_e;  // default: max pub_year
};

/// The window with every default filled in.
struct ResolvedWindow {
  Year ref_year = 0;
  Year cutoff_b = 0;
  Year cutoff_e = 0;
};

/// Throws DataError when ref_year precedes every pub_year or a cutoff lies
/// outside the collection's year span. An empty collection resolves to zeros.
ResolvedWindow resolve_window(const Collection& c, const IndicatorWindow& w);

struct NodeMetrics {
  NodeId node_id = 0;
  std::size_t lcs = 0;
  std::int64_t gcs = 0;
  std::size_t ncr = 0;
  std::size_t lcr = 0;
  int age = 1;  // max(1, ref_year - pub_year + 1)
  double lcs_t = 0;
  double gcs_t = 0;
  std::size_t lcs_b = 0;  // citers with pub_year <= cutoff_b
  std::size_t lcs_e = 0;  // citers with pub_year >= cutoff_e
};

/// One entry per node, in node order.
std::vector<NodeMetrics> node_indicators(const Collection& c, const CitationGraph& g, const IndicatorWindow& w = {});

struct AuthorMetrics {
  std::string name;
  std::size_t tlcs = 0;
  double tlcs_t = 0;
  std::int64_t tgcs = 0;
  double tgcs_t = 0;
  std::size_t tlcs_b = 0;
  std::size_t tlcs_e = 0;
  std::size_t pubs = 0;
  std::size_t tlcr = 0;
};

enum class AuthorSortKey { name, tlcs, tlcs_t, tgcs, tgcs_t, tlcs_b, tlcs_e, pubs, tlcr };

/// Every co-author is credited with the full record. Sorted by `key`
/// descending (name ascending), ties by name.
std::vector<AuthorMetrics> author_table(const Collection& c, const std::vector<NodeMetrics>& nodes,
                                        AuthorSortKey key = AuthorSortKey::tlcs_t);

struct SourceMetrics {
  std::string name;
  std::size_t tlcs = 0;
  std::int64_t tgcs = 0;
  std::size_t pubs = 0;
};

enum class SourceSortKey { name, tlcs, tgcs, pubs };

std::vector<SourceMetrics> source_table(const Collection& c, const std::vector<NodeMetrics>& nodes,
                                        SourceSortKey key = SourceSortKey::pubs);

/// Collection-wide totals shown above the tables.
struct Totals {
  std::size_t count = 0;  // nodes, authors or sources depending on the list
  std::size_t tlcs = 0;
  std::int64_t tgcs = 0;
};

/// "<label>: N, TLCS: x, TGCS: y, mean TLCS: a.bc, mean TGCS: d.ef"; means are
/// TLCS/N and TGCS/N rounded half up, 0.00 when N is 0.
std::string totals_header(const std::string& label, const Totals& t);

Totals collection_totals(const std::vector<NodeMetrics>& nodes, std::size_t count);

struct MatrixRow {
  std::vector<NodeId> cited;
  std::size_t lcr = 0;
  std::size_t ncr = 0;
  std::string label;  // "id year FIRST-AUTHOR"
  std::size_t lcs = 0;
  std::int64_t gcs = 0;
  std::vector<NodeId> citing;
};

struct CitationMatrix {
  Totals totals;
  std::vector<MatrixRow> rows;

  std::string header() const { return totals_header("Nodes", totals); }
};

CitationMatrix citation_matrix(const Collection& c, const CitationGraph& g);

enum class Demography { core, continuant, transient };

const char* to_string(Demography d);

struct AuthorClass {
  std::string name;
  Demography demography = Demography::continuant;
  std::vector<Year> years;  // distinct, ascending
  std::size_t tlcs = 0;
};

/// transient: records in a single year. core: records in both the first and the
/// last third of the year span, and cited locally. continuant: the rest.
/// Rows follow the order of `authors`.
std::vector<AuthorClass> classify_authors(const Collection& c, const std::vector<AuthorMetrics>& authors);

}  // namespace histograph
