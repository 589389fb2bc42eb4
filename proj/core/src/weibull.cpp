#include "histograph/weibull.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "histograph/error.hpp"

namespace histograph {

double weibull_log_likelihood(std::span<const AgeObservation> data, double shape, double scale) {
  if (!(shape > 0) || !(scale > 0)) throw DataError("Weibull parameters must be positive");
  double ll = 0;
  for (const auto& o : data) {
    if (!(o.age > 0)) throw DataError("ages must be positive");
    const double z = o.age / scale;
    const double zk = std::pow(z, shape);
    ll -= zk;
    if (!o.censored) ll += std::log(shape / scale) + (shape - 1) * std::log(z);
  }
  return ll;
}

namespace {

// Profile score in the shape, computed on ages divided by the largest age so
// that u^k stays in (0, 1].
class ShapeEquation {
 public:
  ShapeEquation(std::span<const AgeObservation> data, double max_age) {
    for (const auto& o : data) {
      log_u_.push_back(std::log(o.age / max_age));
      if (!o.censored) {
        event_mean_ += log_u_.back();
        ++events_;
      }
    }
    event_mean_ /= static_cast<double>(events_);
  }

  struct Value {
    double g = 0;      // the score
    double slope = 0;  // its derivative in k
    double sum_uk = 0;
  };

  Value operator()(double k) const {
    double a0 = 0, a1 = 0, a2 = 0;
    for (double lu : log_u_) {
      const double w = std::exp(k * lu);
      a0 += w;
      a1 += w * lu;
      a2 += w * lu * lu;
    }
    const double m1 = a1 / a0;
    return {m1 - 1 / k - event_mean_, a2 / a0 - m1 * m1 + 1 / (k * k), a0};
  }

  std::size_t events() const { return events_; }

 private:
  std::vector<double> log_u_;
  double event_mean_ = 0;
  std::size_t events_ = 0;
};

}  // namespace

WeibullFit weibull_fit(std::span<const AgeObservation> data) {
  WeibullFit fit;
  double max_age = 0;
  for (const auto& o : data) {
    if (!(o.age > 0) || !std::isfinite(o.age)) throw DataError("ages must be positive and finite");
    (o.censored ? fit.n_censored : fit.n_events) += 1;
    max_age = std::max(max_age, o.age);
  }
  if (fit.n_events == 0) throw DataError("every observation is censored");
  if (fit.n_events < 3) {
    throw DataError("insufficient data: " + std::to_string(fit.n_events) + " uncensored observations, need 3");
  }
  const ShapeEquation eq(data, max_age);

  // the score rises from -inf near 0; find a bracket around its root
  double lo = 1, hi = 1;
  while (eq(lo).g >= 0) {
    lo /= 2;
    if (lo < 1e-8) throw DataError("Weibull shape estimate collapses to zero");
  }
  while (eq(hi).g <= 0) {
    hi *= 2;
    if (hi > 1e6) throw DataError("Weibull shape is unbounded: event ages carry no spread");
  }

  double k = std::clamp(1.0, lo, hi);
  if (k == lo || k == hi) k = (lo + hi) / 2;
  for (fit.iterations = 1; fit.iterations <= kMaxShapeIterations; ++fit.iterations) {
    const auto v = eq(k);
    if (v.g < 0) {
      lo = k;
    } else {
      hi = k;
    }
    double next = k - v.g / v.slope;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    const double step = std::abs(next - k);
    k = next;
    if (step < kShapeTolerance) {
      fit.converged = true;
      break;
    }
  }
  fit.iterations = std::min(fit.iterations, kMaxShapeIterations);
  fit.shape = k;
  fit.scale = max_age * std::pow(eq(k).sum_uk / static_cast<double>(eq.events()), 1 / k);
  fit.log_likelihood = weibull_log_likelihood(data, fit.shape, fit.scale);
  return fit;
}

std::vector<AgeObservation> citation_ages(const Collection& c, const CitationGraph& g, std::optional<Year> window_end) {
  if (g.node_count() != c.size()) throw DataError("graph does not belong to this collection");
  std::vector<AgeObservation> out;
  auto span = c.year_span();
  if (!span) return out;
  const Year end = window_end.value_or(span->last);
  if (end < span->last) {
    throw DataError("window end " + std::to_string(end) + " precedes the last publication year " +
                    std::to_string(span->last));
  }
  out.reserve(c.size());
  for (const auto& r : c.records()) {
    auto citers = g.in_neighbors(r.node_id);
    if (citers.empty()) {
      out.push_back({static_cast<double>(end - r.pub_year + 1), true});
      continue;
    }
    Year first = c.node(citers.front()).pub_year;
    for (NodeId v : citers) first = std::min(first, c.node(v).pub_year);
    out.push_back({static_cast<double>(std::max(1, first - r.pub_year + 1)), false});
  }
  return out;
}

}  // namespace histograph
