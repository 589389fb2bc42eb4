#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "histograph/linker.hpp"
#include "histograph/record.hpp"

namespace histograph {

/// Journal productivity histogram: counts[r] = number of journals with exactly
/// r papers. Zero entries are never stored.
class FrequencyDistribution {
 public:
  FrequencyDistribution() = default;

  /// Throws DataError for r = 0 keys; zero counts are dropped.
  explicit FrequencyDistribution(const std::map<std::size_t, std::size_t>& counts);

  const std::map<std::size_t, std::size_t>& counts() const { return counts_; }
  std::size_t f(std::size_t r) const;
  std::size_t total_journals() const { return journals_; }
  std::size_t total_papers() const { return papers_; }
  bool empty() const { return counts_.empty(); }

  bool operator==(const FrequencyDistribution&) const = default;

 private:
  std::map<std::size_t, std::size_t> counts_;
  std::size_t journals_ = 0;
  std::size_t papers_ = 0;
};

FrequencyDistribution journal_frequency(const Collection& c);

/// M = f1 - f2 + f3 - ... with the sign set by rank parity over every rank.
/// Throws DataError for an empty distribution.
std::int64_t brookes_estimate(const FrequencyDistribution& d);

struct KendallPrediction {
  std::size_t observed = 0;  // journals in the sampled period
  std::int64_t additional = 0;  // M
  std::int64_t predicted = 0;   // observed + M, for the doubled period
};

KendallPrediction kendall_prediction(const FrequencyDistribution& d);

/// |predicted - actual| / predicted. Throws DataError unless predicted > 0.
double prediction_error(std::int64_t predicted, std::int64_t actual);

/// Outer references whose cited year equals `target_year`, best first; the
/// top floor(n/5) of those n are kept.
std::vector<OuterReference> augment_8020(const std::vector<OuterReference>& outer, Year target_year);

/// Number of outer references for `target_year` (the n of augment_8020).
std::size_t count_for_year(const std::vector<OuterReference>& outer, Year target_year);

}  // namespace histograph
