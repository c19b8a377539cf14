#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adamcex {

/// Denominator of the iterate update.
///   Pure:           x' = x - alpha * m / sqrt(v)
///   EpsInsideSqrt:  x' = x - alpha * m / sqrt(eps + v^2)
///   EpsOutsideSqrt: x' = x - alpha * m / (eps + sqrt(v^2))
/// The two epsilon forms keep v squared under/inside the root; they are not
/// the usual sqrt(v) + eps regularization.
enum class Variant { Pure, EpsInsideSqrt, EpsOutsideSqrt };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Pure: return "pure";
    case Variant::EpsInsideSqrt: return "eps-inside";
    case Variant::EpsOutsideSqrt: return "eps-outside";
  }
  return "?";
}

inline Variant variant_from_name(const std::string& s) {
  if (s == "pure") return Variant::Pure;
  if (s == "eps-inside") return Variant::EpsInsideSqrt;
  if (s == "eps-outside") return Variant::EpsOutsideSqrt;
  throw std::invalid_argument("unknown variant '" + s + "' (expected pure, eps-inside or eps-outside)");
}

struct AdamParams {
  double alpha = 0.001;            // step length, > 0
  double beta1 = 0.9;              // momentum decay, in [0, 1)
  double beta2 = 0.9;              // second-moment decay, in [0, 1)
  Variant variant = Variant::Pure;
  double epsilon = 0.0;            // used only by the eps variants

  void validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::invalid_argument("alpha must be positive");
    if (!(beta1 >= 0.0 && beta1 < 1.0))
      throw std::invalid_argument("beta1 must be in [0, 1)");
    if (!(beta2 >= 0.0 && beta2 < 1.0))
      throw std::invalid_argument("beta2 must be in [0, 1)");
    if (variant != Variant::Pure && !(epsilon > 0.0))
      throw std::invalid_argument("epsilon must be positive for the eps variants");
  }
};

/// Stepping state over vectors of any dimension. m and v are seeded from the
/// initial gradient (m = g0, v = g0^2 componentwise), so the first update
/// reproduces that gradient exactly: beta*a + (1-beta)*a == a.
struct AdamState {
  std::vector<double> x;
  std::vector<double> m;
  std::vector<double> v;   // >= 0 componentwise once initialized
  std::int64_t k = 0;      // completed steps
  bool initialized = false;
};

namespace detail {

inline void require_finite(const std::vector<double>& g, const char* what) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!std::isfinite(g[i]))
      throw std::invalid_argument(std::string(what) + " has a non-finite entry at component " + std::to_string(i));
}

/// The signed quantity subtracted from x. Shared by adam_step and
/// fixed_point_step so both produce bit-identical displacements.
inline double update_delta(double alpha, double m, double v, Variant variant, double epsilon) {
  double denom;
  switch (variant) {
    case Variant::Pure: denom = std::sqrt(v); break;
    case Variant::EpsInsideSqrt: denom = std::sqrt(epsilon + v * v); break;
    case Variant::EpsOutsideSqrt: denom = epsilon + std::sqrt(v * v); break;
    default: denom = std::sqrt(v); break;
  }
  return alpha * (m / denom);
}

}  // namespace detail

inline AdamState adam_init(const std::vector<double>& x0, const std::vector<double>& g0,
                           const AdamParams& params) {
  params.validate();
  if (x0.empty()) throw std::invalid_argument("adam_init: dimension must be >= 1");
  if (x0.size() != g0.size())
    throw std::invalid_argument("adam_init: x0 has dimension " + std::to_string(x0.size()) +
                                " but g0 has dimension " + std::to_string(g0.size()));
  detail::require_finite(x0, "x0");
  detail::require_finite(g0, "g0");

  AdamState s;
  s.x = x0;
  s.m = g0;
  s.v.resize(g0.size());
  for (std::size_t i = 0; i < g0.size(); ++i) s.v[i] = g0[i] * g0[i];
  s.k = 0;
  s.initialized = true;
  return s;
}

/// One update, componentwise:
///   m' = beta1*m + (1-beta1)*g,  v' = beta2*v + (1-beta2)*g^2,
///   x' = x - alpha*m'/denom(v').
/// The pure recurrence has no zero guard; a vanishing v' is surfaced as an
/// error naming the component instead of being regularized away.
inline void adam_step(AdamState& state, const std::vector<double>& g, const AdamParams& params) {
  params.validate();
  if (!state.initialized) throw std::invalid_argument("adam_step: state not initialized");
  if (g.size() != state.x.size())
    throw std::invalid_argument("adam_step: gradient has dimension " + std::to_string(g.size()) +
                                " but state has dimension " + std::to_string(state.x.size()));
  detail::require_finite(g, "gradient");

  const double c1 = 1.0 - params.beta1;
  const double c2 = 1.0 - params.beta2;
  const std::size_t n = state.x.size();

  // Check for a vanishing denominator before touching the state.
  if (params.variant == Variant::Pure) {
    for (std::size_t i = 0; i < n; ++i) {
      double vn = params.beta2 * state.v[i] + c2 * (g[i] * g[i]);
      if (vn == 0.0)
        throw std::domain_error("adam_step: division by zero, second moment vanished at component " +
                                std::to_string(i));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    double mn = params.beta1 * state.m[i] + c1 * g[i];
    double vn = params.beta2 * state.v[i] + c2 * (g[i] * g[i]);
    state.m[i] = mn;
    state.v[i] = vn;
    state.x[i] = state.x[i] - detail::update_delta(params.alpha, mn, vn, params.variant, params.epsilon);
  }
  state.k += 1;
}

/// Per-step displacement of the iterate at the constant-gradient fixed point
/// (m = c, v = c^2), evaluated with the exact arithmetic of adam_step. For
/// c < 0 the iterate moves forward by the returned amount every step.
inline double fixed_point_step(const AdamParams& params, double gradient_level) {
  params.validate();
  if (gradient_level == 0.0 || !std::isfinite(gradient_level))
    throw std::invalid_argument("fixed_point_step: gradient level must be finite and nonzero");
  double m = gradient_level;
  double v = gradient_level * gradient_level;
  return -detail::update_delta(params.alpha, m, v, params.variant, params.epsilon);
}

}  // namespace adamcex
