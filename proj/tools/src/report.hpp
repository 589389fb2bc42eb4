#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "histograph/historiograph.hpp"
#include "histograph/indicators.hpp"
#include "histograph/linker.hpp"

namespace histograph {

struct ReportOptions {
  IndicatorWindow window;
  std::int64_t threshold = 0;
  ThresholdScope scope = ThresholdScope::global;
  std::size_t top = 30;
  int page_tolerance = kDefaultPageTolerance;
};

/// One self-contained static HTML page: totals, citation matrix, ranked author
/// and source lists, missing links, outer references, demography, main path
/// and the historiograph as inline SVG. Identical inputs give identical bytes.
std::string emit_report(const Collection& c, const CitationGraph& g, const ReportOptions& options = {});

}  // namespace histograph
