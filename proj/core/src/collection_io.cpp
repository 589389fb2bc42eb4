#include "histograph/collection_io.hpp"

#include <cstdio>

#include <json.hpp>

#include "histograph/error.hpp"
#include "histograph/text.hpp"

namespace histograph {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kKind = "histograph.collection";

json optional_text(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw SchemaError("collection document: " + where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = member(obj, key, where);
  if (!v.is_string()) schema(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> get_optional_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = member(obj, key, where);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) schema(where, std::string("'") + key + "' must be a string or null");
  return v.get<std::string>();
}

std::int64_t get_integer(const json& obj, const char* key, const std::string& where) {
  const auto& v = member(obj, key, where);
  if (!v.is_number_integer()) schema(where, std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::string> get_string_list(const json& obj, const char* key, const std::string& where) {
  const auto& v = member(obj, key, where);
  if (!v.is_array()) schema(where, std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& item : v) {
    if (!item.is_string()) schema(where, std::string("'") + key + "' must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

json record_to_json(const SourceRecord& r) {
  json j;
  j["node_id"] = r.node_id;
  j["accession"] = optional_text(r.accession);
  j["authors"] = r.authors;
  j["title"] = r.title;
  j["source"] = r.source;
  j["pub_year"] = r.pub_year;
  j["volume"] = optional_text(r.volume);
  j["issue"] = optional_text(r.issue);
  j["begin_page"] = optional_text(r.begin_page);
  j["end_page"] = optional_text(r.end_page);
  j["subject_categories"] = r.subject_categories;
  j["global_citations"] = r.global_citations;
  j["cited_refs"] = r.cited_refs;
  return j;
}

SourceRecord record_from_json(const json& j, std::size_t index) {
  const std::string where = "records[" + std::to_string(index) + "]";
  if (!j.is_object()) schema(where, "must be an object");
  SourceRecord r;
  auto node = get_integer(j, "node_id", where);
  if (node < 1) schema(where, "node_id must be positive");
  r.node_id = static_cast<NodeId>(node);
  r.accession = get_optional_string(j, "accession", where);
  r.authors = get_string_list(j, "authors", where);
  r.title = get_string(j, "title", where);
  r.source = get_string(j, "source", where);
  auto year = get_integer(j, "pub_year", where);
  if (year < kMinPubYear || year > kMaxPubYear) schema(where, "pub_year out of range");
  r.pub_year = static_cast<Year>(year);
  r.volume = get_optional_string(j, "volume", where);
  r.issue = get_optional_string(j, "issue", where);
  r.begin_page = get_optional_string(j, "begin_page", where);
  r.end_page = get_optional_string(j, "end_page", where);
  r.subject_categories = get_string_list(j, "subject_categories", where);
  r.global_citations = get_integer(j, "global_citations", where);
  if (r.global_citations < 0) schema(where, "global_citations must be nonnegative");
  r.cited_refs = get_string_list(j, "cited_refs", where);
  return r;
}

}  // namespace

std::chrono::year_month_day parse_iso_date(std::string_view s) {
  auto bad = [&] { return DataError("invalid date '" + std::string(s) + "', expected YYYY-MM-DD"); };
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') throw bad();
  auto y = text::parse_uint(s.substr(0, 4));
  auto m = text::parse_uint(s.substr(5, 2));
  auto d = text::parse_uint(s.substr(8, 2));
  if (!y || !m || !d) throw bad();
  std::chrono::year_month_day ymd{std::chrono::year(static_cast<int>(*y)),
                                  std::chrono::month(static_cast<unsigned>(*m)),
                                  std::chrono::day(static_cast<unsigned>(*d))};
  if (!ymd.ok()) throw bad();
  return ymd;
}

std::string format_iso_date(const std::chrono::year_month_day& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                static_cast<unsigned>(d.day()));
  return buf;
}

std::string serialize_collection(const Collection& c) {
  json doc;
  doc["format_version"] = kCollectionFormatVersion;
  doc["kind"] = kKind;
  doc["query_label"] = c.query_label();
  doc["download_date"] = c.download_date() ? json(format_iso_date(*c.download_date())) : json(nullptr);
  if (auto span = c.year_span()) {
    doc["year_span"] = json::array({span->first, span->last});
  } else {
    doc["year_span"] = nullptr;
  }
  json records = json::array();
  for (const auto& r : c.records()) records.push_back(record_to_json(r));
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

Collection parse_collection(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("collection document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("document", "must be an object");
  if (get_string(doc, "kind", "document") != kKind) schema("document", "kind is not a collection");
  auto version = get_integer(doc, "format_version", "document");
  if (version != kCollectionFormatVersion) {
    schema("document", "unsupported format_version " + std::to_string(version));
  }
  Provenance prov;
  prov.query_label = get_string(doc, "query_label", "document");
  if (auto date = get_optional_string(doc, "download_date", "document")) {
    try {
      prov.download_date = parse_iso_date(*date);
    } catch (const DataError& e) {
      schema("download_date", e.what());
    }
  }
  const auto& items = member(doc, "records", "document");
  if (!items.is_array()) schema("document", "'records' must be an array");
  std::vector<SourceRecord> records;
  records.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) records.push_back(record_from_json(items[i], i));

  const std::vector<SourceRecord> listed = records;
  Collection c(std::move(records), std::move(prov));
  if (c.size() != listed.size()) schema("records", "duplicate record keys");
  for (std::size_t i = 0; i < listed.size(); ++i) {
    if (!(c.records()[i] == listed[i])) {
      schema("records[" + std::to_string(i) + "]", "records are not in canonical order with node ids 1..N");
    }
  }
  // the derived year_span must agree when present
  const auto& span = member(doc, "year_span", "document");
  auto expected = c.year_span();
  if (span.is_null() != !expected ||
      (expected && (!span.is_array() || span.size() != 2 || span[0] != expected->first ||
                    span[1] != expected->last))) {
    schema("document", "year_span does not match the records");
  }
  return c;
}

}  // namespace histograph
