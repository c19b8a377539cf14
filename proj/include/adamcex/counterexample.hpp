#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "adamcex/fp.hpp"
#include "adamcex/function.hpp"
#include "adamcex/hermite.hpp"

namespace adamcex {

/// Data for the divergence-inducing test function: knots spaced `alpha`
/// apart starting at 0, values k * value_increment, all slopes equal to
/// gradient_level. The default (gradient_level -1, increment 0) is the
/// function with f = 0 and f' = -1 at every knot.
struct CounterexampleSpec {
  double alpha = 1.0;             // knot spacing, > 0
  std::int64_t num_knots = 16;    // K + 1, >= 2
  double gradient_level = -1.0;   // common slope, < 0
  double value_increment = 0.0;   // per-knot value growth, >= 0

  void validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::invalid_argument("counterexample: alpha must be positive");
    if (num_knots < 2)
      throw std::invalid_argument("counterexample: need at least 2 knots");
    if (!(gradient_level < 0.0) || !std::isfinite(gradient_level))
      throw std::invalid_argument("counterexample: gradient level must be negative");
    if (!(value_increment >= 0.0) || !std::isfinite(value_increment))
      throw std::invalid_argument("counterexample: value increment must be nonnegative");
  }
};

/// Knot positions by repeated addition of `spacing`, the same operation the
/// optimizer applies to its iterate. Iterates produced by constant steps of
/// `spacing` therefore coincide with these knots bit for bit, which is what
/// makes the recorded gradients exactly equal to the knot slopes.
inline std::vector<double> accumulate_knots(double start, double spacing, std::int64_t count) {
  std::vector<double> knots(static_cast<std::size_t>(count));
  double x = start;
  for (std::int64_t j = 0; j < count; ++j) {
    knots[static_cast<std::size_t>(j)] = x;
    x = x + spacing;
  }
  return knots;
}

/// Hermite interpolant through the spec's data. The left tail has slope
/// gradient_level through (0, 0), so the default build is exactly -t for
/// t < 0; evaluation beyond the last knot uses the right tail, whose slope
/// is also gradient_level.
inline PiecewiseHermite build_counterexample(const CounterexampleSpec& spec) {
  spec.validate();
  std::vector<double> knots = accumulate_knots(0.0, spec.alpha, spec.num_knots);
  std::vector<double> values(knots.size());
  std::vector<double> slopes(knots.size(), spec.gradient_level);
  for (std::size_t j = 0; j < values.size(); ++j)
    values[j] = static_cast<double>(j) * spec.value_increment;
  return PiecewiseHermite(std::move(knots), std::move(values), std::move(slopes));
}

inline std::string describe_counterexample(const CounterexampleSpec& spec) {
  return "counterexample(alpha=" + format_double(spec.alpha) +
         ",knots=" + format_int(spec.num_knots) +
         ",gradient_level=" + format_double(spec.gradient_level) +
         ",value_increment=" + format_double(spec.value_increment) + ")";
}

/// The default counterexample evaluated from its per-piece polynomial
///   p(w) = -w + (3/s) w^2 - (2/s^2) w^3,   w = t - x_k,  s = x_{k+1} - x_k,
/// (here in the cancellation-free factored form -w (1-u)(1-2u), u = w/s)
/// with derivative -1 + 6u(1-u). This is a second, independent route to the
/// same function as build_counterexample with default data; the two must
/// agree to a few ulps and the test suites check that they do. It shares the
/// knot array construction so the comparison is about the interpolation
/// arithmetic, not about knot placement.
class ClosedFormCounterexample final : public DifferentiableFunction {
 public:
  ClosedFormCounterexample(double alpha, std::int64_t num_knots)
      : alpha_(alpha), knots_(accumulate_knots(0.0, alpha, num_knots)) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::invalid_argument("counterexample: alpha must be positive");
    if (num_knots < 2) throw std::invalid_argument("counterexample: need at least 2 knots");
  }

  double value(double t) const override {
    check_finite(t);
    if (t < 0.0) return -t;
    if (t >= knots_.back()) return -(t - knots_.back());
    std::size_t k = locate(t);
    double s = knots_[k + 1] - knots_[k];
    double w = t - knots_[k];
    double u = w / s;
    return -w * (1.0 - u) * (1.0 - 2.0 * u);
  }

  double derivative(double t) const override {
    check_finite(t);
    if (t < 0.0 || t >= knots_.back()) return -1.0;
    std::size_t k = locate(t);
    double s = knots_[k + 1] - knots_[k];
    double u = (t - knots_[k]) / s;
    return -1.0 + 6.0 * u * (1.0 - u);
  }

  double alpha() const { return alpha_; }
  const std::vector<double>& knots() const { return knots_; }

 private:
  static void check_finite(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("counterexample: non-finite evaluation point");
  }

  std::size_t locate(double t) const {
    std::size_t last = knots_.size() - 2;
    double guess = std::floor(t / alpha_);
    if (guess < 0.0) guess = 0.0;
    std::size_t k = std::min(static_cast<std::size_t>(guess), last);
    while (k > 0 && t < knots_[k]) --k;
    while (k < last && t >= knots_[k + 1]) ++k;
    return k;
  }

  double alpha_;
  std::vector<double> knots_;
};

}  // namespace adamcex
