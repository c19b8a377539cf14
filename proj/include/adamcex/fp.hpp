#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace adamcex {

/// Distance to the next representable double above |x|.
inline double ulp_of(double x) {
  double a = std::fabs(x);
  if (!std::isfinite(a)) return std::numeric_limits<double>::quiet_NaN();
  return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

/// |a - b| measured in ulps at the magnitude `scale`.
inline double ulps_apart(double a, double b, double scale) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / ulp_of(scale);
}

/// Decimal rendering with 17 significant digits (lossless for doubles,
/// locale independent). Used for every CSV/JSON real the project emits.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string format_int(std::int64_t k) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), k);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
  double out = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  return out;
}

}  // namespace adamcex
