#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "histograph/linker.hpp"
#include "histograph/record.hpp"

namespace histograph {

/// Time to first local citation, or a right-censored lower bound on it.
struct AgeObservation {
  double age = 0;
  bool censored = false;
};

struct WeibullFit {
  double shape = 0;
  double scale = 0;
  double log_likelihood = 0;
  std::size_t n_events = 0;
  std::size_t n_censored = 0;
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kShapeTolerance = 1e-9;
inline constexpr int kMaxShapeIterations = 200;

/// Log-likelihood of right-censored data: events contribute the density,
/// censored ages the survival function. Throws DataError on non-positive
/// parameters or ages.
double weibull_log_likelihood(std::span<const AgeObservation> data, double shape, double scale);

/// Maximum likelihood fit. The shape solves the profile equation by Newton steps
/// kept inside a bisection bracket; the scale follows in closed form.
///
/// Throws DataError when an age is not positive, when every observation is
/// censored, with fewer than 3 events ("insufficient data"), or when the event
/// ages leave the shape unbounded (all identical).
WeibullFit weibull_fit(std::span<const AgeObservation> data);

/// Per node: first local citation year - pub_year + 1 (at least 1), or, for a
/// node never cited locally, a censored age window_end - pub_year + 1.
/// window_end defaults to the last pub_year; an earlier one throws DataError.
std::vector<AgeObservation> citation_ages(const Collection& c, const CitationGraph& g,
                                          std::optional<Year> window_end = std::nullopt);

}  // namespace histograph
