#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace histograph::text {

std::string_view trim(std::string_view s);
std::string to_upper(std::string_view s);

/// Collapses runs of whitespace to a single space and trims both ends.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

/// Parses a non-empty run of decimal digits. No sign, no surrounding blanks.
std::optional<std::int64_t> parse_uint(std::string_view s);

/// Three-way compare where two all-digit strings compare by value and
/// anything else falls back to byte order (numbers sort before words).
int compare_numeric_text(std::string_view a, std::string_view b);

/// Fixed two-decimal rendering of num/den with half-up rounding. den > 0.
std::string format_ratio2(std::int64_t num, std::int64_t den);

/// Two-decimal rendering of a real value, half away from zero.
std::string format_fixed2(double value);

/// Escapes &, <, >, " and ' for XML/HTML text and attributes.
std::string xml_escape(std::string_view s);

}  // namespace histograph::text
