#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace histograph {

/// 1-based position of a record in a collection's canonical order.
using NodeId = std::uint32_t;

using Year = int;

inline constexpr Year kMinPubYear = 1500;
inline constexpr Year kMaxPubYear = 2100;

/// One bibliographic record of a collection.
struct SourceRecord {
  std::optional<std::string> accession;
  std::vector<std::string> authors;  // normalized, "SURNAME INITIALS"
  std::string title;
  std::string source;  // uppercased journal title
  Year pub_year = 0;
  std::optional<std::string> volume;
  std::optional<std::string> issue;
  std::optional<std::string> begin_page;
  std::optional<std::string> end_page;
  std::vector<std::string> subject_categories;
  std::int64_t global_citations = 0;
  std::vector<std::string> cited_refs;
  NodeId node_id = 0;

  const std::string& first_author() const;

  bool operator==(const SourceRecord&) const = default;
};

struct YearSpan {
  Year first = 0;
  Year last = 0;

  int length() const { return last - first + 1; }
  bool contains(Year y) const { return y >= first && y <= last; }

  bool operator==(const YearSpan&) const = default;
};

struct Provenance {
  std::string query_label;
  std::optional<std::chrono::year_month_day> download_date;

  bool operator==(const Provenance&) const = default;
};

/// Orders two records by (pub_year, source, volume, issue, begin_page, accession,
/// first author). Volume, issue and page compare numerically when both are integers.
bool canonical_less(const SourceRecord& a, const SourceRecord& b);

/// An immutable, deduplicated, canonically ordered set of records.
///
/// Construction drops duplicate records (same record_key, keeping the one with
/// the larger global citation count), sorts canonically and assigns node ids
/// 1..N.
class Collection {
 public:
  Collection() = default;
  explicit Collection(std::vector<SourceRecord> records, Provenance provenance = {});

  std::span<const SourceRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  /// Throws DataError for an id outside 1..size().
  const SourceRecord& node(NodeId id) const;
  bool contains(NodeId id) const { return id >= 1 && id <= records_.size(); }

  const Provenance& provenance() const { return provenance_; }
  const std::string& query_label() const { return provenance_.query_label; }
  const std::optional<std::chrono::year_month_day>& download_date() const {
    return provenance_.download_date;
  }

  /// Empty for an empty collection.
  std::optional<YearSpan> year_span() const;

  bool operator==(const Collection&) const = default;

 private:
  std::vector<SourceRecord> records_;
  Provenance provenance_;
};

}  // namespace histograph
