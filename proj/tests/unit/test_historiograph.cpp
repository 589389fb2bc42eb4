#include <doctest.h>

#include <regex>

#include "fixtures.hpp"
#include "histograph/error.hpp"
#include "histograph/historiograph.hpp"
#include "oracles.hpp"

using namespace histograph;

namespace {

struct Alert92 {
  Collection c = testing::load_fixture("alert92.txt");
  CitationGraph g = link_citations(c);
  std::vector<NodeMetrics> m = node_indicators(c, g);
};

std::size_t count_matches(const std::string& s, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("threshold 0 keeps the whole alert92 network") {
  Alert92 a;
  auto sel = select_subgraph(a.g, a.m, 0, ThresholdScope::global);
  CHECK(sel.nodes.size() == 15);
  CHECK(sel.links.size() == 19);
}

TEST_CASE("threshold 55 keeps the five most cited nodes") {
  Alert92 a;
  auto sel = select_subgraph(a.g, a.m, 55, ThresholdScope::global);
  CHECK(sel.nodes == std::vector<NodeId>{2, 6, 7, 9, 10});
  CHECK(sel.links == std::vector<Edge>{{7, 6}, {9, 2}, {9, 6}, {10, 2}});
}

TEST_CASE("thresholds above every score select nothing") {
  Alert92 a;
  auto sel = select_subgraph(a.g, a.m, 302, ThresholdScope::global);
  CHECK(sel.nodes.empty());
  CHECK(sel.links.empty());
  CHECK_THROWS_AS(select_subgraph(a.g, a.m, -1, ThresholdScope::global), DataError);
}

TEST_CASE("local scope thresholds on LCS") {
  Alert92 a;
  auto sel = select_subgraph(a.g, a.m, 3, ThresholdScope::local);
  CHECK(sel.nodes == std::vector<NodeId>{1, 2, 4});
  CHECK(sel.links == std::vector<Edge>{{2, 1}, {4, 1}, {4, 2}});
}

TEST_CASE("yearly layout") {
  Alert92 a;
  auto spec = layout_yearly(select_subgraph(a.g, a.m, 0, ThresholdScope::global), a.c, a.g);
  REQUIRE(spec.rows.size() == 6);
  CHECK(spec.rows.front().year == 1987);
  CHECK(spec.rows.back().year == 1992);
  CHECK(spec.rows[4].year == 1991);
  CHECK(spec.rows[2].nodes == std::vector<NodeId>{4, 5, 6});
  CHECK(spec.rows[5].nodes == std::vector<NodeId>{10, 11, 12, 13, 14, 15});
  CHECK(spec.node(2).lcs == 5);
  CHECK(spec.node(2).radius > spec.node(1).radius);
  CHECK(spec.node(7).radius == kMinRadius);
  for (const auto& e : spec.links) CHECK(spec.node(e.citing).year >= spec.node(e.cited).year);

  // 1988 and 1990 stay as empty rows
  auto b = layout_yearly(select_subgraph(a.g, a.m, 55, ThresholdScope::global), a.c, a.g, 55);
  REQUIRE(b.rows.size() == 6);
  CHECK(b.rows[1].nodes.empty());
  CHECK(b.rows[3].nodes.empty());

  auto single = layout_yearly(Selection{{3}, {}}, a.c, a.g);
  CHECK(single.rows.size() == 1);
  CHECK(layout_yearly(Selection{}, a.c, a.g).rows.empty());
}

TEST_CASE("circle area grows linearly with citations") {
  CHECK(node_radius(0) == kMinRadius);
  const double r4 = node_radius(4), r16 = node_radius(16);
  CHECK(r16 * r16 / (r4 * r4) == doctest::Approx(4.0));
}

TEST_CASE("DOT output") {
  Alert92 a;
  auto spec = layout_yearly(select_subgraph(a.g, a.m, 55, ThresholdScope::global), a.c, a.g, 55);
  auto dot = emit_dot(spec);
  CHECK(count_matches(dot, R"(\n    \d+ \[label=)") == 5);
  CHECK(count_matches(dot, R"(\n  \d+ -> \d+)") == 4);
  CHECK(count_matches(dot, R"(rank=same)") == 4);
  CHECK(dot.find("9 -> 2;") != std::string::npos);
  CHECK(dot.find("tooltip=\"1987 PALLARES R\"") != std::string::npos);
  CHECK(dot == emit_dot(spec));

  auto empty = emit_dot(HistoriographSpec{});
  CHECK(empty.starts_with("digraph historiograph {"));
  CHECK(empty.ends_with("}\n"));
  CHECK(count_matches(empty, "->") == 0);

  // same-year links do not constrain ranks
  auto full = emit_dot(layout_yearly(select_subgraph(a.g, a.m, 0, ThresholdScope::global), a.c, a.g));
  CHECK(full.find("13 -> 14 [constraint=false];") != std::string::npos);
}

TEST_CASE("SVG output is deterministic and well formed") {
  Alert92 a;
  auto spec = layout_yearly(select_subgraph(a.g, a.m, 0, ThresholdScope::global), a.c, a.g);
  auto svg = emit_svg(spec);
  CHECK(svg == emit_svg(spec));
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") != std::string::npos);
  CHECK(count_matches(svg, "<circle ") == 15);
  CHECK(count_matches(svg, "marker-end") == 19);
  CHECK(count_matches(svg, ">198[7-9]</text>|>199[0-2]</text>") == 6);
  CHECK(svg.ends_with("</svg>\n"));
}

TEST_CASE("main path on a chain") {
  // a cites b cites c, with years c < b < a
  auto rec = [](const char* au, Year y, const char* vol, std::vector<std::string> refs) {
    SourceRecord r;
    r.authors = {au};
    r.source = "J";
    r.pub_year = y;
    r.volume = vol;
    r.begin_page = "1";
    r.cited_refs = std::move(refs);
    return r;
  };
  Collection c({rec("C", 1990, "1", {}), rec("B", 1991, "2", {"C, 1990, J, V1, P1"}),
                rec("A", 1992, "3", {"B, 1991, J, V2, P1"})});
  auto g = link_citations(c);
  CHECK(main_path(c, g) == std::vector<NodeId>{1, 2, 3});
}

TEST_CASE("main path on alert92 equals the exhaustive optimum") {
  Alert92 a;
  auto flow = flow_dag(a.c, a.g);
  // the same-year links 2->1, 13->14 and 15->14 are dropped
  for (const auto& e : flow) CHECK(a.c.node(e.citing).pub_year < a.c.node(e.cited).pub_year);
  CHECK(flow.size() == 16);
  auto brute = testing::brute_main_path(a.c.size(), flow);
  CHECK(main_path(a.c, a.g) == brute.path);
  auto spc = search_path_counts(a.c.size(), flow);
  CHECK(spc.total_paths == brute.total_paths);
  for (std::size_t i = 0; i < spc.edges.size(); ++i) {
    CHECK(spc.weight[i] == brute.edge_paths[{spc.edges[i].citing, spc.edges[i].cited}]);
  }
}

TEST_CASE("main path picks the heavier component") {
  // component one: 1->2; component two: 3->4, 3->5, 4->6, 5->6
  std::vector<Edge> flow{{1, 2}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};
  auto path = main_path(6, flow);
  CHECK(path == testing::brute_main_path(6, flow).path);
  CHECK(path == std::vector<NodeId>{3, 4, 6});
  // equal weights fall to the smaller ids
  CHECK(main_path(4, std::vector<Edge>{{3, 4}, {1, 2}}) == std::vector<NodeId>{1, 2});
}

TEST_CASE("main path edge cases") {
  CHECK(main_path(3, std::vector<Edge>{}).empty());
  CHECK_THROWS_AS(main_path(3, std::vector<Edge>{{1, 2}, {2, 3}, {3, 1}}), DataError);
  CHECK_THROWS_AS(main_path(2, std::vector<Edge>{{1, 3}}), DataError);
}
