#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adamcex/fp.hpp"
#include "adamcex/function.hpp"
#include "adamcex/rng.hpp"
#include "adamcex/trajectory.hpp"

namespace adamcex {

enum class Verdict { Diverges, Stalls, Converges };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Diverges: return "diverges";
    case Verdict::Stalls: return "stalls";
    case Verdict::Converges: return "converges";
  }
  return "?";
}

/// The claim "x_k tends to infinity" is asymptotic; a finite run is scored
/// against 90% of the exact linear escape K * alpha instead.
inline double default_divergence_threshold(std::int64_t num_steps, double alpha) {
  return 0.9 * static_cast<double>(num_steps) * alpha;
}

inline constexpr double kDefaultGradientFloor = 0.5;

/// Diverges: the iterate escaped past `threshold` while every gradient kept
/// magnitude at least `gradient_floor`. Converges: some gradient fell below
/// the floor. Stalls: bounded iterates with gradients bounded away from 0.
inline Verdict divergence_verdict(const Trajectory& traj, double threshold, double gradient_floor) {
  if (traj.records.empty()) throw std::invalid_argument("divergence_verdict: empty trajectory");
  if (!(threshold > 0.0) || !(gradient_floor > 0.0))
    throw std::invalid_argument("divergence_verdict: threshold and gradient floor must be positive");
  if (traj.min_abs_gradient < gradient_floor) return Verdict::Converges;
  if (std::fabs(traj.final_x) >= threshold) return Verdict::Diverges;
  return Verdict::Stalls;
}

/// Empirical sup of |f'(t) - f'(t2)| / |t - t2| over seeded sample pairs in
/// [lo, hi]. Half the pairs use short separations (log-uniform between 1e-6
/// and 1e-2 of the span), since the difference quotient attains the Lipschitz
/// constant only for pairs hugging a breakpoint of f''.
inline double estimate_lipschitz(const DifferentiableFunction& fn, double lo, double hi,
                                 std::int64_t num_pairs, std::uint64_t seed) {
  if (!(hi > lo)) throw std::invalid_argument("estimate_lipschitz: degenerate span");
  if (num_pairs < 1) throw std::invalid_argument("estimate_lipschitz: need at least one pair");
  Rng rng(seed);
  const double width = hi - lo;
  double best = 0.0;
  for (std::int64_t i = 0; i < num_pairs; ++i) {
    double t = rng.uniform(lo, hi);
    double t2;
    if (i % 2 == 0) {
      double gap = width * std::pow(10.0, -6.0 + 4.0 * rng.uniform01());
      t2 = t + gap;
      if (t2 > hi) t2 = t - gap;
    } else {
      t2 = rng.uniform(lo, hi);
    }
    if (t2 == t) continue;
    double q = std::fabs(fn.derivative(t) - fn.derivative(t2)) / std::fabs(t - t2);
    best = std::max(best, q);
  }
  return best;
}

/// Residuals of the first-order model T_k(s) = f_k + g_k s across one step,
/// compared against the bounds s_k^2 / alpha and s_k / alpha.
struct TaylorStep {
  double value_residual = 0.0;     // |f_{k+1} - T_k(s_k)|
  double value_bound = 0.0;        // s_k^2 / alpha
  bool value_within = false;
  double gradient_residual = 0.0;  // |g_{k+1} - g_k|
  double gradient_bound = 0.0;     // s_k / alpha
  bool gradient_within = false;
};

inline std::vector<TaylorStep> taylor_residuals(const Trajectory& traj, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("taylor_residuals: alpha must be positive");
  if (traj.records.size() < 2)
    throw std::invalid_argument("taylor_residuals: need at least 2 records");
  for (const auto& r : traj.records)
    if (!std::isfinite(r.f) || !std::isfinite(r.g))
      throw std::invalid_argument("taylor_residuals: missing or non-finite function data at k = " +
                                  std::to_string(r.k));
  std::vector<TaylorStep> out(traj.records.size() - 1);
  for (std::size_t i = 0; i + 1 < traj.records.size(); ++i) {
    const auto& a = traj.records[i];
    const auto& b = traj.records[i + 1];
    double s = b.x - a.x;
    TaylorStep& ts = out[i];
    ts.value_residual = std::fabs(b.f - (a.f + a.g * s));
    ts.value_bound = s * s / alpha;
    ts.value_within = ts.value_residual <= ts.value_bound;
    ts.gradient_residual = std::fabs(b.g - a.g);
    ts.gradient_bound = std::fabs(s) / alpha;
    ts.gradient_within = ts.gradient_residual <= ts.gradient_bound;
  }
  return out;
}

/// Minimum of f over a uniform grid on [lo, hi], sharpened by one
/// golden-section pass around the best grid cell.
inline double scan_lower_bound(const DifferentiableFunction& fn, double lo, double hi,
                               std::int64_t points_per_unit) {
  if (!(hi > lo)) throw std::invalid_argument("scan_lower_bound: degenerate span");
  if (points_per_unit < 1) throw std::invalid_argument("scan_lower_bound: points_per_unit must be positive");
  const double width = hi - lo;
  const std::int64_t n = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(width * static_cast<double>(points_per_unit))));
  double best = std::numeric_limits<double>::infinity();
  std::int64_t best_i = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    double t = lo + (static_cast<double>(i) * width) / static_cast<double>(n);
    double v = fn.value(t);
    if (v < best) { best = v; best_i = i; }
  }
  double a = lo + (static_cast<double>(std::max<std::int64_t>(best_i - 1, 0)) * width) / static_cast<double>(n);
  double b = lo + (static_cast<double>(std::min<std::int64_t>(best_i + 1, n)) * width) / static_cast<double>(n);
  const double inv_phi = 0.6180339887498949;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn.value(c);
  double fd = fn.value(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-14 * std::max(1.0, std::fabs(b)); ++iter) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn.value(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn.value(d);
    }
    best = std::min(best, std::min(fc, fd));
  }
  return best;
}

/// Max relative mismatch between central differences and the analytic
/// derivative at seeded sample points. Points are kept at least 2h away from
/// every entry of `avoid` (an interpolant's knots), where the one-sided kink
/// would turn the O(h^2) truncation into O(h).
inline double finite_difference_audit(const DifferentiableFunction& fn, double lo, double hi,
                                      std::int64_t num_points, double h, std::uint64_t seed,
                                      const std::vector<double>& avoid = {}) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_difference_audit: h must be positive");
  if (!(hi > lo) || !(hi - lo > 4.0 * h))
    throw std::invalid_argument("finite_difference_audit: span must exceed 4h");
  if (num_points < 1) throw std::invalid_argument("finite_difference_audit: need at least one point");
  Rng rng(seed);
  double worst = 0.0;
  for (std::int64_t i = 0; i < num_points; ++i) {
    double t = 0.0;
    bool ok = false;
    for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
      t = rng.uniform(lo + 2.0 * h, hi - 2.0 * h);
      ok = true;
      if (!avoid.empty()) {
        auto it = std::lower_bound(avoid.begin(), avoid.end(), t);
        if (it != avoid.end() && std::fabs(*it - t) < 2.0 * h) ok = false;
        if (it != avoid.begin() && std::fabs(*(it - 1) - t) < 2.0 * h) ok = false;
      }
    }
    if (!ok)
      throw std::runtime_error("finite_difference_audit: could not place a sample 2h away from the knots");
    double cd = (fn.value(t + h) - fn.value(t - h)) / (2.0 * h);
    double an = fn.derivative(t);
    double err = std::fabs(cd - an) / std::max(1.0, std::fabs(an));
    worst = std::max(worst, err);
  }
  return worst;
}

/// Statistics backing a divergence verdict.
struct DivergenceStats {
  Verdict verdict = Verdict::Stalls;
  double final_abs_x = 0.0;
  double min_abs_gradient = 0.0;
  double max_abs_step = 0.0;
  double threshold = 0.0;
  double gradient_floor = 0.0;
};

/// One named pass/fail outcome of a verification check.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Everything the verification workflow certifies about one configuration.
/// Serialized with every real as a 17-digit decimal string.
struct DiagnosticsReport {
  double lipschitz_estimate = 0.0;
  double lipschitz_bound = 0.0;          // 6 / alpha when applicable
  double derivative_sup_estimate = 0.0;  // observed max |f'|, reported not asserted
  double lower_bound_estimate = 0.0;
  DivergenceStats divergence;
  std::vector<TaylorStep> taylor_residuals;
  std::vector<CheckResult> checks;

  void write_json(std::ostream& os) const {
    os << "{\n";
    os << "  \"lipschitz_estimate\": \"" << format_double(lipschitz_estimate) << "\",\n";
    os << "  \"lipschitz_bound\": \"" << format_double(lipschitz_bound) << "\",\n";
    os << "  \"derivative_sup_estimate\": \"" << format_double(derivative_sup_estimate) << "\",\n";
    os << "  \"lower_bound_estimate\": \"" << format_double(lower_bound_estimate) << "\",\n";
    os << "  \"divergence\": {\n";
    os << "    \"verdict\": \"" << verdict_name(divergence.verdict) << "\",\n";
    os << "    \"final_abs_x\": \"" << format_double(divergence.final_abs_x) << "\",\n";
    os << "    \"min_abs_gradient\": \"" << format_double(divergence.min_abs_gradient) << "\",\n";
    os << "    \"max_abs_step\": \"" << format_double(divergence.max_abs_step) << "\",\n";
    os << "    \"threshold\": \"" << format_double(divergence.threshold) << "\",\n";
    os << "    \"gradient_floor\": \"" << format_double(divergence.gradient_floor) << "\"\n";
    os << "  },\n";
    os << "  \"taylor_residuals\": [";
    for (std::size_t i = 0; i < taylor_residuals.size(); ++i) {
      const TaylorStep& ts = taylor_residuals[i];
      os << (i == 0 ? "\n" : ",\n");
      os << "    {\"value_residual\": \"" << format_double(ts.value_residual)
         << "\", \"value_bound\": \"" << format_double(ts.value_bound)
         << "\", \"value_within\": " << (ts.value_within ? "true" : "false")
         << ", \"gradient_residual\": \"" << format_double(ts.gradient_residual)
         << "\", \"gradient_bound\": \"" << format_double(ts.gradient_bound)
         << "\", \"gradient_within\": " << (ts.gradient_within ? "true" : "false") << "}";
    }
    os << (taylor_residuals.empty() ? "]" : "\n  ]") << ",\n";
    os << "  \"checks\": [";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      os << (i == 0 ? "\n" : ",\n");
      os << "    {\"name\": \"" << checks[i].name << "\", \"passed\": "
         << (checks[i].passed ? "true" : "false") << ", \"detail\": \"" << checks[i].detail << "\"}";
    }
    os << (checks.empty() ? "]" : "\n  ]") << "\n";
    os << "}\n";
  }
};

}  // namespace adamcex
