#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "adamcex/adam.hpp"

namespace adamcex {

/// One recorded iteration of a 1D run. (m_k, v_k) are the moments computed
/// from g_k during step k, so each record re-derives from its predecessor
/// through the update recurrences.
struct TrajectoryRecord {
  std::int64_t k = 0;
  double x = 0.0;
  double f = 0.0;
  double g = 0.0;
  double m = 0.0;
  double v = 0.0;
};

/// Records are strictly increasing in k, starting at 0 and ending at
/// num_steps; with record_stride 1 every step is present. The stats fields
/// are accumulated online over *all* steps, recorded or not.
struct Trajectory {
  std::vector<TrajectoryRecord> records;
  AdamParams params;
  std::string function_id;
  std::int64_t num_steps = 0;
  std::int64_t record_stride = 1;

  double final_x = 0.0;
  double min_abs_gradient = 0.0;
  double max_abs_step = 0.0;
  double min_step = 0.0;
  double max_step = 0.0;
};

/// Displacements x_{k+1} - x_k between consecutive records. With stride 1
/// these are the per-step lengths s_k.
inline std::vector<double> step_sizes(const Trajectory& traj) {
  if (traj.records.size() < 2)
    throw std::invalid_argument("step_sizes: need at least 2 records, got " +
                                std::to_string(traj.records.size()));
  std::vector<double> s(traj.records.size() - 1);
  for (std::size_t i = 0; i + 1 < traj.records.size(); ++i)
    s[i] = traj.records[i + 1].x - traj.records[i].x;
  return s;
}

}  // namespace adamcex
