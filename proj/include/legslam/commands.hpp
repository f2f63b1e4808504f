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

#ifndef LEGSLAM_COMMANDS_HPP
#define LEGSLAM_COMMANDS_HPP

#include <string>

#include "legslam/config.hpp"

namespace legslam {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitRuntimeFailure = 1;
inline constexpr int kExitUsageError = 2;

/// comparison.csv body:
/// scenario,variant,seed,delta_z_m,delta_xy_m,rmse_z_m,rmse_xyz_m,
/// iterations,final_cost,wall_time_s,diverged
/// with aggregate rows using seed=mean and seed=std. Caveat lines are
/// emitted as '#' comments above the header.
std::string ComparisonCsv(const ComparisonReport& report,
                          const std::vector<std::string>& caveats = {});

std::string ElevationProfileCsv(
    const std::vector<ElevationProfilePoint>& profile);

/// Writes ground truth, LiDAR odometry and FK odometry (TUM format)
/// plus the expanded config for the first configured seed.
int CmdSimulate(const RunConfig& config);

/// Simulates, builds and optimizes one variant, writes the output
/// trajectory, solve stats and elevation profile. Returns
/// kExitRuntimeFailure on divergence (outputs still written).
int CmdSolve(const RunConfig& config, Variant variant);

/// Runs every configured variant over every seed and writes
/// comparison.csv (optionally SVG elevation plots). Returns success
/// when at least one cell converged.
int CmdCompare(const RunConfig& config);

}  // namespace legslam

#endif  // LEGSLAM_COMMANDS_HPP
