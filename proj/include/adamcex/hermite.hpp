#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adamcex/function.hpp"

namespace adamcex {

/// Piecewise cubic Hermite interpolant through (x_k, f_k, g_k) data with
/// linear tails of slope g_0 / g_K beyond the first / last knot.
///
/// On [x_k, x_{k+1}] with h = x_{k+1} - x_k and u = (t - x_k)/h the piece is
/// the unique cubic
///   f_k (2u^3 - 3u^2 + 1) + f_{k+1} (-2u^3 + 3u^2)
///   + h g_k (u^3 - 2u^2 + u) + h g_{k+1} (u^3 - u^2).
/// The result is C^1 everywhere (tail junctions included) but generally not
/// C^2: the second derivative jumps at knots.
///
/// Pieces are half-open [x_k, x_{k+1}): a knot belongs to the piece on its
/// right, and the last knot belongs to the right tail. The basis is arranged
/// so that evaluation at a knot returns (f_k, g_k) bit-exactly.
class PiecewiseHermite final : public DifferentiableFunction {
 public:
  PiecewiseHermite(std::vector<double> knots, std::vector<double> values,
                   std::vector<double> slopes)
      : knots_(std::move(knots)), values_(std::move(values)), slopes_(std::move(slopes)) {
    if (knots_.size() < 2)
      throw std::invalid_argument("hermite: need at least 2 knots, got " + std::to_string(knots_.size()));
    if (values_.size() != knots_.size() || slopes_.size() != knots_.size())
      throw std::invalid_argument("hermite: knots, values and slopes must have equal length");
    for (std::size_t j = 0; j < knots_.size(); ++j) {
      if (!std::isfinite(knots_[j]) || !std::isfinite(values_[j]) || !std::isfinite(slopes_[j]))
        throw std::invalid_argument("hermite: non-finite data at index " + std::to_string(j));
      if (j > 0 && !(knots_[j] > knots_[j - 1]))
        throw std::invalid_argument("hermite: knots must be strictly increasing (violated at index " +
                                    std::to_string(j) + ")");
    }
    detect_uniform();
  }

  double value(double t) const override {
    check_finite(t);
    if (t < knots_.front()) return values_.front() + slopes_.front() * (t - knots_.front());
    if (t >= knots_.back()) return values_.back() + slopes_.back() * (t - knots_.back());
    std::size_t k = piece_index(t);
    double h = knots_[k + 1] - knots_[k];
    double u = (t - knots_[k]) / h;
    return piece_value(k, h, u);
  }

  double derivative(double t) const override {
    check_finite(t);
    if (t < knots_.front()) return slopes_.front();
    if (t >= knots_.back()) return slopes_.back();
    std::size_t k = piece_index(t);
    double h = knots_[k + 1] - knots_[k];
    double u = (t - knots_[k]) / h;
    return piece_derivative(k, h, u);
  }

  std::pair<double, double> value_and_derivative(double t) const override {
    check_finite(t);
    if (t < knots_.front())
      return {values_.front() + slopes_.front() * (t - knots_.front()), slopes_.front()};
    if (t >= knots_.back())
      return {values_.back() + slopes_.back() * (t - knots_.back()), slopes_.back()};
    std::size_t k = piece_index(t);
    double h = knots_[k + 1] - knots_[k];
    double u = (t - knots_[k]) / h;
    return {piece_value(k, h, u), piece_derivative(k, h, u)};
  }

  /// Second derivative of the active piece; 0 on the tails. The function is
  /// not C^2 at knots, so asking exactly there is an error rather than a
  /// one-sided convention.
  double second_derivative(double t) const {
    check_finite(t);
    if (std::binary_search(knots_.begin(), knots_.end(), t))
      throw std::domain_error("second_derivative: undefined at knot t = " + std::to_string(t) +
                              " (derivative has a kink there)");
    if (t < knots_.front() || t > knots_.back()) return 0.0;
    std::size_t k = piece_index(t);
    double h = knots_[k + 1] - knots_[k];
    double u = (t - knots_[k]) / h;
    double s00 = 12.0 * u - 6.0;
    double s10 = 6.0 * u - 4.0;
    double s11 = 6.0 * u - 2.0;
    return (values_[k] * s00 - values_[k + 1] * s00) / (h * h) +
           (slopes_[k] * s10 + slopes_[k + 1] * s11) / h;
  }

  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& slopes() const { return slopes_; }

 private:
  static void check_finite(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("hermite: non-finite evaluation point");
  }

  void detect_uniform() {
    h0_ = knots_[1] - knots_[0];
    uniform_ = true;
    for (std::size_t j = 1; j + 1 < knots_.size(); ++j) {
      if (std::fabs((knots_[j + 1] - knots_[j]) - h0_) > 1e-8 * h0_) {
        uniform_ = false;
        break;
      }
    }
  }

  /// Largest k with knots[k] <= t < knots[k+1]; caller guarantees t is in
  /// the knot span. Uniform spacing gets an O(1) guess plus local repair,
  /// otherwise binary search.
  std::size_t piece_index(double t) const {
    std::size_t last = knots_.size() - 2;
    std::size_t k;
    if (uniform_) {
      double guess = std::floor((t - knots_.front()) / h0_);
      if (guess < 0.0) guess = 0.0;
      k = std::min(static_cast<std::size_t>(guess), last);
      while (k > 0 && t < knots_[k]) --k;
      while (k < last && t >= knots_[k + 1]) ++k;
    } else {
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
      k = static_cast<std::size_t>(it - knots_.begin()) - 1;
      if (k > last) k = last;
    }
    return k;
  }

  double piece_value(std::size_t k, double h, double u) const {
    double b00 = (2.0 * u - 3.0) * (u * u) + 1.0;
    double b01 = (3.0 - 2.0 * u) * (u * u);
    double b10 = ((u - 2.0) * u + 1.0) * u;
    double b11 = (u - 1.0) * (u * u);
    return (values_[k] * b00 + values_[k + 1] * b01) +
           h * (slopes_[k] * b10 + slopes_[k + 1] * b11);
  }

  double piece_derivative(std::size_t k, double h, double u) const {
    double d00 = 6.0 * u * (u - 1.0);
    double d10 = (3.0 * u - 1.0) * (u - 1.0);
    double d11 = u * (3.0 * u - 2.0);
    return (values_[k] * d00 - values_[k + 1] * d00) / h +
           (slopes_[k] * d10 + slopes_[k + 1] * d11);
  }

  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  double h0_ = 0.0;
  bool uniform_ = false;
};

}  // namespace adamcex
