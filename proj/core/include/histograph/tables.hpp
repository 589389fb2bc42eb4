#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "histograph/indicators.hpp"
#include "histograph/linker.hpp"
#include "histograph/sampling.hpp"
#include "histograph/weibull.hpp"

namespace histograph {

inline constexpr int kTableFormatVersion = 1;

/// Integers print as is, reals with two decimals in TSV.
using Cell = std::variant<std::int64_t, double, std::string>;

/// A rendered report table: free-text header lines, named columns, rows.
struct Table {
  std::string kind;
  std::vector<std::string> preamble;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Preamble lines, the column line, then one line per row. Tabs and newlines
/// inside cells become spaces.
std::string render_tsv(const Table& t);

/// {"format_version", "kind", "header", "columns", "rows"}, rows as arrays.
std::string render_json(const Table& t);

std::string cell_text(const Cell& c);

/// "1982 MANAGEMENT SCIENCE 28(3):276-288"
std::string describe_record(const SourceRecord& r);

const char* sort_label(AuthorSortKey k);
const char* sort_label(SourceSortKey k);
/// Accepts the column names used in the tables ("TLCS/t", "Pubs", "Name", ...),
/// case-insensitively. Throws DataError otherwise.
AuthorSortKey parse_author_sort_key(std::string_view s);
SourceSortKey parse_source_sort_key(std::string_view s);

/// `top` of 0 keeps every row.
Table matrix_table(const CitationMatrix& m);
Table author_list_table(const std::vector<AuthorMetrics>& rows, const Totals& totals, AuthorSortKey key,
                        std::size_t top = 0);
Table source_list_table(const std::vector<SourceMetrics>& rows, const Totals& totals, SourceSortKey key,
                        std::size_t top = 0);
Table missing_links_table(const Collection& c, const std::vector<MissingLink>& links);
Table outer_references_table(const std::vector<OuterReference>& rows, std::size_t top = 0);
Table reference_levels_table(NodeId node, const std::vector<std::vector<NodeId>>& levels);
Table demography_table(const std::vector<AuthorClass>& rows);
Table frequency_table(const FrequencyDistribution& d);
Table brookes_table(const FrequencyDistribution& d, std::optional<std::int64_t> actual);
Table augment_table(const std::vector<OuterReference>& selected, std::size_t considered, Year target_year);
Table weibull_table(const WeibullFit& fit);

}  // namespace histograph
