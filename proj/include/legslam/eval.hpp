/*
 * Copyright 2026 The legslam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LEGSLAM_EVAL_HPP
#define LEGSLAM_EVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "legslam/sim.hpp"

namespace legslam {

/// Start-to-finish pose error on a physically closed loop.
struct LoopClosureReport {
  double delta_z = 0.0;   // meters
  double delta_xy = 0.0;  // meters
  bool diverged = false;  // deltas are meaningless when set
};

struct TrajectoryError {
  double rmse_xyz = 0.0;
  double rmse_z = 0.0;
  double max_abs_z = 0.0;
  std::vector<double> z_errors;  // per keyframe, signed
};

struct ElevationProfilePoint {
  int index = 0;
  double z_estimated = 0.0;
  double z_true = 0.0;
};

/// One (scenario, variant, seed) cell of the comparison sweep.
struct CellResult {
  std::string scenario;
  std::string variant;
  uint64_t seed = 0;
  LoopClosureReport loop_closure;
  TrajectoryError error;
  SolveStats stats;
  bool diverged = false;
  std::string failure;  // non-empty when the cell errored out
};

/// Mean/stddev over the converged cells of one (scenario, variant).
struct AggregateResult {
  std::string scenario;
  std::string variant;
  int converged_cells = 0;
  int diverged_cells = 0;
  LoopClosureReport mean;
  LoopClosureReport stddev;
  double mean_rmse_z = 0.0;
  double mean_rmse_xyz = 0.0;
};

struct ComparisonReport {
  std::vector<CellResult> cells;
  std::vector<AggregateResult> aggregates;
};

/// Throws std::invalid_argument on fewer than 2 poses.
LoopClosureReport LoopClosureDiscrepancy(
    const std::vector<OdometrySample>& trajectory);

/// Raw per-keyframe errors against simulated ground truth; no
/// alignment is applied. Throws std::invalid_argument on length or
/// timestamp mismatch.
TrajectoryError ComputeTrajectoryError(
    const std::vector<OdometrySample>& trajectory,
    const std::vector<OdometrySample>& ground_truth);

std::vector<ElevationProfilePoint> ElevationProfile(
    const std::vector<OdometrySample>& trajectory,
    const std::vector<OdometrySample>& ground_truth);

/// For each seed: simulate once, then build + optimize every variant
/// on the identical streams. A non-converged or failed solve is
/// recorded as a diverged cell and never aborts the sweep.
ComparisonReport CompareVariants(const ScenarioSpec& spec,
                                 const SensorNoiseSpec& noise,
                                 const std::vector<LaneConfig>& configs,
                                 const std::vector<uint64_t>& seeds,
                                 const SolverSettings& settings = {});

}  // namespace legslam

#endif  // LEGSLAM_EVAL_HPP
