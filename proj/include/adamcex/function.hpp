#pragma once

#include <utility>

namespace adamcex {

/// A scalar C^1 function: finite value and finite first derivative at every
/// finite input.
class DifferentiableFunction {
 public:
  virtual ~DifferentiableFunction() = default;

  virtual double value(double t) const = 0;
  virtual double derivative(double t) const = 0;

  /// Both at once; overridden where one lookup can serve both.
  virtual std::pair<double, double> value_and_derivative(double t) const {
    return {value(t), derivative(t)};
  }
};

}  // namespace adamcex
