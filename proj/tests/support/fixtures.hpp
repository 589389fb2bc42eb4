#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "histograph/collection_io.hpp"
#include "histograph/ingest.hpp"
#include "histograph/record.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(HISTOGRAPH_FIXTURE_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(HISTOGRAPH_GOLDEN_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline histograph::Collection load_fixture(const std::string& name) {
  return histograph::parse_export(read_text(fixture_path(name))).collection;
}

// Writes a collection back out in the tagged export format.
inline std::string to_export_text(const histograph::Collection& c) {
  std::string out = "FN Export\nVR 1.0\n";
  auto field = [&](const char* tag, const std::string& v) { out += std::string(tag) + " " + v + "\n"; };
  auto list = [&](const char* tag, const std::vector<std::string>& items) {
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? std::string("   ") : std::string(tag) + " ") + items[i] + "\n";
  };
  for (const auto& r : c.records()) {
    out += "PT J\n";
    list("AU", r.authors);
    if (!r.title.empty()) field("TI", r.title);
    field("SO", r.source);
    if (!r.subject_categories.empty()) {
      std::string sc;
      for (const auto& s : r.subject_categories) sc += (sc.empty() ? "" : "; ") + s;
      field("SC", sc);
    }
    field("PY", std::to_string(r.pub_year));
    if (r.volume) field("VL", *r.volume);
    if (r.issue) field("IS", *r.issue);
    if (r.begin_page) field("BP", *r.begin_page);
    if (r.end_page) field("EP", *r.end_page);
    field("TC", std::to_string(r.global_citations));
    if (r.accession) field("UT", *r.accession);
    list("CR", r.cited_refs);
    out += "ER\n\n";
  }
  out += "EF\n";
  return out;
}

}  // namespace testing
