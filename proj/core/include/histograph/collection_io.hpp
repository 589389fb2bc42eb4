#pragma once

#include <string>
#include <string_view>

#include "histograph/record.hpp"

namespace histograph {

inline constexpr int kCollectionFormatVersion = 1;

/// Renders the canonical collection document: every record field verbatim plus
/// provenance. Identical collections render to identical bytes.
std::string serialize_collection(const Collection& c);

/// Inverse of serialize_collection. Throws SchemaError when the document is not
/// a collection, uses an unknown format version, has wrongly typed fields, or
/// lists records out of canonical order.
Collection parse_collection(std::string_view document);

/// "YYYY-MM-DD"; throws DataError otherwise.
std::chrono::year_month_day parse_iso_date(std::string_view s);
std::string format_iso_date(const std::chrono::year_month_day& d);

}  // namespace histograph
