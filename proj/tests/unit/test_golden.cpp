#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "fixtures.hpp"
#include "histograph/historiograph.hpp"
#include "report.hpp"

using namespace histograph;

namespace {

// HISTOGRAPH_UPDATE_GOLDEN=1 rewrites the stored files instead of comparing.
void check_golden(const std::string& name, const std::string& actual) {
  const auto path = testing::golden_path(name);
  if (std::getenv("HISTOGRAPH_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  CHECK(testing::read_text(path) == actual);
}

}  // namespace

TEST_CASE("DOT output at threshold 0") {
  auto c = testing::load_fixture("alert92.txt");
  auto g = link_citations(c);
  auto nodes = node_indicators(c, g, {});
  auto spec = layout_yearly(select_subgraph(g, nodes, 0, ThresholdScope::global), c, g, 0, ThresholdScope::global);
  check_golden("alert92_threshold0.dot", emit_dot(spec));
}

TEST_CASE("HTML report") {
  auto c = testing::load_fixture("barbacid.txt");
  auto g = link_citations(c);
  check_golden("barbacid_report.html", emit_report(c, g, ReportOptions{}));
}
