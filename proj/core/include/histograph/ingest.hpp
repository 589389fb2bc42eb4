#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "histograph/record.hpp"

namespace histograph {

/// Canonical author form: uppercase, no periods or commas, single spaces.
/// With a comma ("Pallares, R. J.") the part after it is read as initials and
/// packed together: "PALLARES RJ".
std::string normalize_author(std::string_view name);

/// Dedup key built from record fields when no accession number is present.
struct FieldKey {
  std::string first_author;
  Year pub_year = 0;
  std::string source;
  std::string volume;
  std::string begin_page;

  auto operator<=>(const FieldKey&) const = default;
};

/// The accession number when present, otherwise the field tuple.
using RecordKey = std::variant<std::string, FieldKey>;

RecordKey record_key(const SourceRecord& r);

std::string to_string(const RecordKey& key);

struct ParseOptions {
  Provenance provenance;
};

struct ParsedExport {
  Collection collection;
  std::vector<std::string> warnings;  // one per rejected record
};

/// Parses field-tagged export text (two-letter tags in columns 1-2, value from
/// column 4, three-space continuation lines, ER/EF terminators).
///
/// Throws ParseError on malformed lines, bad TC values and unterminated records.
/// Records without a usable PY are dropped and reported in `warnings`.
ParsedExport parse_export(std::string_view text, const ParseOptions& options = {});

/// Union by record_key. On collision the record with more global citations
/// wins (ties keep the copy from the later download). Provenance takes the
/// later download date and joins distinct query labels with " + ".
Collection merge_collections(const Collection& a, const Collection& b);

}  // namespace histograph
