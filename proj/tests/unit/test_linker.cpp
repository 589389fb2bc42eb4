#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "histograph/error.hpp"
#include "histograph/linker.hpp"

using namespace histograph;

namespace {

std::vector<NodeId> ids(std::span<const NodeId> s) { return {s.begin(), s.end()}; }

SourceRecord record(std::string author, Year year, std::optional<std::string> vol, std::optional<std::string> page,
                    std::vector<std::string> refs = {}) {
  SourceRecord r;
  r.authors = {std::move(author)};
  r.source = "J TEST";
  r.pub_year = year;
  r.volume = std::move(vol);
  r.begin_page = std::move(page);
  r.cited_refs = std::move(refs);
  return r;
}

}  // namespace

TEST_CASE("cited references split into their segments") {
  auto r = parse_cited_ref("BROOKE MH, 1970, ARCH NEUROL-CHICAGO, V23, P369");
  CHECK(r.author == "BROOKE MH");
  CHECK(r.year == 1970);
  CHECK(r.source == "ARCH NEUROL-CHICAGO");
  CHECK(r.volume == "23");
  CHECK(r.page == "369");
  CHECK(r.raw == "BROOKE MH, 1970, ARCH NEUROL-CHICAGO, V23, P369");

  auto s = parse_cited_ref("SPETZLER CS, 1975, MANAGEMENT SCI, V22");
  CHECK(s.volume == "22");
  CHECK_FALSE(s.page);

  auto anon = parse_cited_ref("ANON");
  CHECK(anon.author == "ANON");
  CHECK_FALSE(anon.year);
  CHECK_FALSE(anon.source);

  auto book = parse_cited_ref("RAIFFA H, 1968, DECISION ANAL");
  CHECK(book.source == "DECISION ANAL");
  CHECK_FALSE(book.volume);

  // a journal called VIROLOGY is not a volume
  auto v = parse_cited_ref("SMITH J, 1984, VIROLOGY, V133, P1");
  CHECK(v.source == "VIROLOGY");
  CHECK(v.volume == "133");

  auto doi = parse_cited_ref("KIM J, 2001, J PHYSIOL, V5, P10, DOI 10.1000/xyz");
  CHECK(doi.page == "10");
  CHECK(format_cited_ref(doi) == "KIM J, 2001, J PHYSIOL, V5, P10");
}

TEST_CASE("exact match needs volume or page agreement") {
  auto target = record("SMITH J", 1990, "12", "100");
  CHECK(exact_match(parse_cited_ref("SMITH J, 1990, J X, V12, P100"), target));
  CHECK_FALSE(exact_match(parse_cited_ref("SMITH J, 1990, J X, V12, P101"), target));
  CHECK_FALSE(exact_match(parse_cited_ref("SMITH J, 1990, J X, V12"), target));
  CHECK_FALSE(exact_match(parse_cited_ref("SMITH J, 1990, J X"), target));
  CHECK_FALSE(exact_match(parse_cited_ref("SMITH J, 1991, J X, V12, P100"), target));
  CHECK_FALSE(exact_match(parse_cited_ref("SMYTH J, 1990, J X, V12, P100"), target));
  // the journal string plays no part
  CHECK(exact_match(parse_cited_ref("SMITH J, 1990, SOMETHING ELSE, V12, P100"), target));
  auto no_page = record("SMITH J", 1990, "12", std::nullopt);
  CHECK(exact_match(parse_cited_ref("SMITH J, 1990, J X, V12"), no_page));
}

TEST_CASE("alert92 citation matrix edges") {
  auto c = testing::load_fixture("alert92.txt");
  auto g = link_citations(c);
  CHECK(g.node_count() == 15);
  CHECK(g.edges().size() == 19);
  CHECK(ids(g.out_neighbors(9)) == std::vector<NodeId>{1, 2, 4, 6});
  CHECK(ids(g.in_neighbors(2)) == std::vector<NodeId>{4, 5, 9, 10, 11});
  CHECK(ids(g.out_neighbors(13)) == std::vector<NodeId>{14});
  CHECK(g.has_edge(13, 14));
  CHECK_FALSE(g.has_edge(14, 13));
  std::size_t ncr = 0;
  for (const auto& r : c.records()) ncr += r.cited_refs.size();
  CHECK(ncr == 240);
  CHECK(g.outer_pool().size() == 221);
}

TEST_CASE("one record has no edges") {
  Collection c({record("A B", 2000, "1", "1", {"A B, 2000, J TEST, V1, P1", "C D, 1999, J Y, V2"})});
  auto g = link_citations(c);
  CHECK(g.edges().empty());
  CHECK(g.outer_pool().size() == 2);
}

TEST_CASE("two mentions of one node collapse to one edge") {
  Collection c({record("A B", 2000, "1", "1"),
                record("C D", 2001, "2", "5", {"A B, 2000, J TEST, V1, P1", "A B, 2000, JOURNAL OF TESTS, V1, P1"})});
  auto g = link_citations(c);
  CHECK(g.edges().size() == 1);
  CHECK(g.in_degree(1) == 1);
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(CitationGraph(3, {{1, 1}}), DataError);
  CHECK_THROWS_AS(CitationGraph(3, {{1, 4}}), DataError);
  CHECK_THROWS_AS(CitationGraph(3, {{0, 2}}), DataError);
  CitationGraph g(3, {{1, 2}, {1, 2}, {3, 2}});
  CHECK(g.edges().size() == 2);
  CHECK(g.in_degree(2) == 2);
  CHECK_THROWS_AS(g.out_neighbors(4), DataError);
}

TEST_CASE("missing links find the page-absent and page-shifted cases") {
  auto c = testing::load_fixture("management_science.txt");
  auto g = link_citations(c);
  auto found = find_missing_links(c, g);
  REQUIRE(found.size() == 2);
  std::set<std::string> raws;
  for (const auto& m : found) {
    raws.insert(m.ref.raw);
    CHECK_FALSE(g.has_edge(m.citing, m.candidate));
  }
  CHECK(raws == std::set<std::string>{"SPETZLER CS, 1975, MANAGEMENT SCI, V22", "BENSON PG, 1995, MANAGE SCI, V41, P1637"});
  for (const auto& m : found) {
    const auto& to = c.node(m.candidate);
    if (m.ref.raw.starts_with("SPETZLER")) {
      CHECK(c.node(m.citing).first_author() == "NORTH DW");
      CHECK(to.first_author() == "SPETZLER CS");
      CHECK(to.begin_page == "340");
    } else {
      CHECK(to.begin_page == "1639");
      CHECK(to.end_page == "1653");
    }
  }
  // tolerance 0 keeps the page-absent case only
  auto strict = find_missing_links(c, g, 0);
  REQUIRE(strict.size() == 1);
  CHECK(strict[0].ref.raw.starts_with("SPETZLER"));
}

TEST_CASE("outer references on the muscle fiber 2002 collection") {
  auto c = testing::load_fixture("muscle_2002.txt");
  auto g = link_citations(c);
  auto outer = outer_references(g);
  CHECK(outer.size() == 8007);
  REQUIRE_FALSE(outer.empty());
  CHECK(outer[0].label() == "BROOKE MH, 1970, ARCH NEUROL-CHICAGO, V23, P369");
  CHECK(outer[0].citing_records == 10);
  for (std::size_t i = 1; i < outer.size(); ++i) {
    REQUIRE(outer[i - 1].citing_records >= outer[i].citing_records);
    REQUIRE(outer[i].citing_records <= c.size());
  }
  CHECK(outer_references(CitationGraph(2, {})).empty());
}

TEST_CASE("reference levels accumulate") {
  auto g = link_citations(testing::load_fixture("alert92.txt"));
  auto levels = reference_levels(g, 9, 3);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0] == std::vector<NodeId>{1, 2, 4, 6});
  CHECK(levels[1] == std::vector<NodeId>{1, 2, 3, 4, 6});
  CHECK(levels[2] == levels[1]);
  for (const auto& l : reference_levels(g, 3, 2)) CHECK(l.empty());
  CHECK_THROWS_AS(reference_levels(g, 16, 0), DataError);
  CHECK_THROWS_AS(reference_levels(g, 0, 0), DataError);
}
