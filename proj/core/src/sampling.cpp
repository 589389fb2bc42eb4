#include "histograph/sampling.hpp"

#include <algorithm>
#include <cstdlib>

#include "histograph/error.hpp"

namespace histograph {

FrequencyDistribution::FrequencyDistribution(const std::map<std::size_t, std::size_t>& counts) {
  for (const auto& [r, f] : counts) {
    if (r == 0) throw DataError("frequency distribution rank must be at least 1");
    if (f == 0) continue;
    counts_[r] = f;
    journals_ += f;
    papers_ += r * f;
  }
}

std::size_t FrequencyDistribution::f(std::size_t r) const {
  auto it = counts_.find(r);
  return it == counts_.end() ? 0 : it->second;
}

FrequencyDistribution journal_frequency(const Collection& c) {
  std::map<std::string, std::size_t> per_source;
  for (const auto& r : c.records()) ++per_source[r.source];
  std::map<std::size_t, std::size_t> hist;
  for (const auto& [_, n] : per_source) ++hist[n];
  return FrequencyDistribution(hist);
}

std::int64_t brookes_estimate(const FrequencyDistribution& d) {
  if (d.empty()) throw DataError("Brookes estimate needs a nonempty frequency distribution");
  std::int64_t m = 0;
  for (const auto& [r, f] : d.counts()) {
    const auto term = static_cast<std::int64_t>(f);
    m += r % 2 == 1 ? term : -term;
  }
  return m;
}

KendallPrediction kendall_prediction(const FrequencyDistribution& d) {
  KendallPrediction p;
  p.observed = d.total_journals();
  p.additional = brookes_estimate(d);
  p.predicted = static_cast<std::int64_t>(p.observed) + p.additional;
  return p;
}

double prediction_error(std::int64_t predicted, std::int64_t actual) {
  if (predicted <= 0) throw DataError("prediction error needs a positive prediction");
  return static_cast<double>(std::llabs(predicted - actual)) / static_cast<double>(predicted);
}

namespace {

std::vector<OuterReference> for_year(const std::vector<OuterReference>& outer, Year target_year) {
  std::vector<OuterReference> hits;
  for (const auto& o : outer) {
    if (o.ref.year && *o.ref.year == target_year) hits.push_back(o);
  }
  // input order breaks ties, so an already ranked list is kept as is
  std::stable_sort(hits.begin(), hits.end(), [](const OuterReference& a, const OuterReference& b) {
    return a.citing_records > b.citing_records;
  });
  return hits;
}

}  // namespace

std::vector<OuterReference> augment_8020(const std::vector<OuterReference>& outer, Year target_year) {
  auto hits = for_year(outer, target_year);
  hits.resize(hits.size() / 5);
  return hits;
}

std::size_t count_for_year(const std::vector<OuterReference>& outer, Year target_year) {
  return static_cast<std::size_t>(std::count_if(outer.begin(), outer.end(), [&](const OuterReference& o) {
    return o.ref.year && *o.ref.year == target_year;
  }));
}

}  // namespace histograph
