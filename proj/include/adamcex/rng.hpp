#pragma once

#include <cstdint>
#include <random>

namespace adamcex {

/// Seeded generator for the sampling diagnostics. Draws are produced from
/// the raw mt19937_64 stream (not std distributions), so a given seed yields
/// the same sequence on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace adamcex
