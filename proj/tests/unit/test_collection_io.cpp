#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "histograph/collection_io.hpp"
#include "histograph/error.hpp"

using namespace histograph;

namespace {

Collection with_provenance(const Collection& c, Provenance p) {
  return Collection({c.records().begin(), c.records().end()}, std::move(p));
}

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("collection documents round-trip bit for bit") {
  for (const char* name : {"alert92.txt", "barbacid.txt", "management_science.txt", "muscle_2002.txt"}) {
    CAPTURE(name);
    auto c = testing::load_fixture(name);
    const auto doc = serialize_collection(c);
    const auto back = parse_collection(doc);
    CHECK(back == c);
    CHECK(serialize_collection(back) == doc);
  }
}

TEST_CASE("provenance survives the round trip") {
  auto c = with_provenance(testing::load_fixture("alert92.txt"), {"pneumococci", parse_iso_date("2005-02-11")});
  const auto doc = serialize_collection(c);
  CHECK(doc.find("\"download_date\": \"2005-02-11\"") != std::string::npos);
  CHECK(doc.find("\"year_span\": [\n    1987,\n    1992\n  ]") != std::string::npos);
  auto back = parse_collection(doc);
  CHECK(back.query_label() == "pneumococci");
  CHECK(back == c);
}

TEST_CASE("an empty collection serializes with null span") {
  auto doc = serialize_collection(Collection{});
  CHECK(doc.find("\"year_span\": null") != std::string::npos);
  CHECK(parse_collection(doc).empty());
}

TEST_CASE("dates") {
  CHECK(format_iso_date(parse_iso_date("2004-05-14")) == "2004-05-14");
  CHECK_THROWS_AS(parse_iso_date("2004-02-30"), DataError);
  CHECK_THROWS_AS(parse_iso_date("2004/05/14"), DataError);
  CHECK_THROWS_AS(parse_iso_date("20040514"), DataError);
}

TEST_CASE("schema violations are rejected") {
  const auto doc = serialize_collection(testing::load_fixture("alert92.txt"));
  CHECK_THROWS_AS(parse_collection("not json"), SchemaError);
  CHECK_THROWS_AS(parse_collection("[]"), SchemaError);
  CHECK_THROWS_AS(parse_collection(replace_once(doc, "\"format_version\": 1", "\"format_version\": 9")), SchemaError);
  CHECK_THROWS_AS(parse_collection(replace_once(doc, "histograph.collection", "something.else")), SchemaError);
  CHECK_THROWS_AS(parse_collection(replace_once(doc, "\"pub_year\": 1987", "\"pub_year\": \"1987\"")), SchemaError);
  CHECK_THROWS_AS(parse_collection(replace_once(doc, "\"global_citations\": 45", "\"global_citations\": -1")),
                  SchemaError);
  // node ids must follow canonical order
  CHECK_THROWS_AS(parse_collection(replace_once(doc, "\"node_id\": 1,", "\"node_id\": 7,")), SchemaError);
  CHECK_THROWS_AS(parse_collection(replace_once(doc, "    1992\n  ]", "    1993\n  ]")), SchemaError);
  CHECK_THROWS_AS(parse_collection(replace_once(doc, "\"query_label\": \"\",", "")), SchemaError);
}

TEST_CASE("a schema error is a data error") {
  CHECK_THROWS_AS(parse_collection("{}"), DataError);
}
