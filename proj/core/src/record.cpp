#include "histograph/record.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "histograph/error.hpp"
#include "histograph/ingest.hpp"
#include "histograph/text.hpp"

namespace histograph {

namespace {

const std::string kEmpty;

int compare_optional(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  if (!a || !b) return a ? 1 : (b ? -1 : 0);
  return text::compare_numeric_text(*a, *b);
}

int compare_plain(const std::optional<std::string>& a, const std::optional<std::string>& b) {
  if (!a || !b) return a ? 1 : (b ? -1 : 0);
  int c = a->compare(*b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// true when `challenger` should replace `incumbent` for the same key
bool prefer(const SourceRecord& challenger, const SourceRecord& incumbent) {
  if (challenger.global_citations != incumbent.global_citations)
    return challenger.global_citations > incumbent.global_citations;
  if (challenger.cited_refs.size() != incumbent.cited_refs.size())
    return challenger.cited_refs.size() > incumbent.cited_refs.size();
  return false;
}

}  // namespace

const std::string& SourceRecord::first_author() const {
  return authors.empty() ? kEmpty : authors.front();
}

bool canonical_less(const SourceRecord& a, const SourceRecord& b) {
  if (a.pub_year != b.pub_year) return a.pub_year < b.pub_year;
  if (int c = a.source.compare(b.source); c != 0) return c < 0;
  if (int c = compare_optional(a.volume, b.volume); c != 0) return c < 0;
  if (int c = compare_optional(a.issue, b.issue); c != 0) return c < 0;
  if (int c = compare_optional(a.begin_page, b.begin_page); c != 0) return c < 0;
  if (int c = compare_plain(a.accession, b.accession); c != 0) return c < 0;
  if (int c = a.first_author().compare(b.first_author()); c != 0) return c < 0;
  return std::tie(a.title, a.authors, a.global_citations, a.cited_refs) <
         std::tie(b.title, b.authors, b.global_citations, b.cited_refs);
}

Collection::Collection(std::vector<SourceRecord> records, Provenance provenance)
    : provenance_(std::move(provenance)) {
  // first occurrence wins ties, so callers control precedence by ordering
  std::map<RecordKey, std::size_t> seen;
  std::vector<SourceRecord> kept;
  kept.reserve(records.size());
  for (auto& r : records) {
    auto key = record_key(r);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), kept.size());
      kept.push_back(std::move(r));
    } else if (prefer(r, kept[it->second])) {
      kept[it->second] = std::move(r);
    }
  }
  std::sort(kept.begin(), kept.end(), canonical_less);
  NodeId id = 1;
  for (auto& r : kept) r.node_id = id++;
  records_ = std::move(kept);
}

const SourceRecord& Collection::node(NodeId id) const {
  if (!contains(id)) {
    throw DataError("node id " + std::to_string(id) + " outside 1.." + std::to_string(records_.size()));
  }
  return records_[id - 1];
}

std::optional<YearSpan> Collection::year_span() const {
  if (records_.empty()) return std::nullopt;
  // canonical order is year-major
  return YearSpan{records_.front().pub_year, records_.back().pub_year};
}

}  // namespace histograph
