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

#include "legslam/eval.hpp"

#include <cmath>
#include <stdexcept>

namespace legslam {

LoopClosureReport LoopClosureDiscrepancy(
    const std::vector<OdometrySample>& trajectory) {
  if (trajectory.size() < 2) {
    throw std::invalid_argument(
        "LoopClosureDiscrepancy: need at least 2 poses");
  }
  const Eigen::Vector3d first = trajectory.front().pose.translation();
  const Eigen::Vector3d last = trajectory.back().pose.translation();
  LoopClosureReport report;
  report.delta_z = std::abs(last.z() - first.z());
  report.delta_xy = (last.head<2>() - first.head<2>()).norm();
  return report;
}

TrajectoryError ComputeTrajectoryError(
    const std::vector<OdometrySample>& trajectory,
    const std::vector<OdometrySample>& ground_truth) {
  if (trajectory.size() != ground_truth.size()) {
    throw std::invalid_argument("ComputeTrajectoryError: length mismatch");
  }
  TrajectoryError error;
  double sum_sq_xyz = 0.0;
  double sum_sq_z = 0.0;
  error.z_errors.reserve(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    if (trajectory[k].t != ground_truth[k].t) {
      throw std::invalid_argument(
          "ComputeTrajectoryError: timestamp mismatch at index " +
          std::to_string(k));
    }
    const Eigen::Vector3d diff = trajectory[k].pose.translation() -
                                 ground_truth[k].pose.translation();
    sum_sq_xyz += diff.squaredNorm();
    sum_sq_z += diff.z() * diff.z();
    error.z_errors.push_back(diff.z());
    error.max_abs_z = std::max(error.max_abs_z, std::abs(diff.z()));
  }
  const double n = static_cast<double>(trajectory.size());
  error.rmse_xyz = std::sqrt(sum_sq_xyz / n);
  error.rmse_z = std::sqrt(sum_sq_z / n);
  return error;
}

std::vector<ElevationProfilePoint> ElevationProfile(
    const std::vector<OdometrySample>& trajectory,
    const std::vector<OdometrySample>& ground_truth) {
  if (trajectory.size() != ground_truth.size()) {
    throw std::invalid_argument("ElevationProfile: length mismatch");
  }
  std::vector<ElevationProfilePoint> profile;
  profile.reserve(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    profile.push_back({static_cast<int>(k),
                       trajectory[k].pose.translation().z(),
                       ground_truth[k].pose.translation().z()});
  }
  return profile;
}

ComparisonReport CompareVariants(const ScenarioSpec& spec,
                                 const SensorNoiseSpec& noise,
                                 const std::vector<LaneConfig>& configs,
                                 const std::vector<uint64_t>& seeds,
                                 const SolverSettings& settings) {
  if (configs.empty() || seeds.empty()) {
    throw std::invalid_argument(
        "CompareVariants: need at least one variant and one seed");
  }

  ComparisonReport report;
  for (uint64_t seed : seeds) {
    const SimulatedRun run = Simulate(spec, noise, seed);
    for (const LaneConfig& config : configs) {
      CellResult cell;
      cell.scenario = spec.name;
      cell.variant = VariantName(config.variant);
      cell.seed = seed;
      try {
        HybridGraph hybrid = BuildGraph(run.lidar_odom, run.fk_odom, config);
        auto [values, stats] = Optimize(hybrid.graph, hybrid.values, settings);
        cell.stats = stats;
        if (!stats.converged) {
          cell.diverged = true;
          cell.loop_closure.diverged = true;
        } else {
          const auto trajectory = ExtractOutputTrajectory(hybrid, values);
          cell.loop_closure = LoopClosureDiscrepancy(trajectory);
          cell.error = ComputeTrajectoryError(trajectory, run.ground_truth);
        }
      } catch (const std::exception& e) {
        cell.diverged = true;
        cell.loop_closure.diverged = true;
        cell.failure = e.what();
      }
      report.cells.push_back(std::move(cell));
    }
  }

  // Aggregates in (variant-config, fixed) order; diverged cells are
  // counted but excluded from the statistics.
  for (const LaneConfig& config : configs) {
    AggregateResult agg;
    agg.scenario = spec.name;
    agg.variant = VariantName(config.variant);

    std::vector<const CellResult*> converged;
    for (const CellResult& cell : report.cells) {
      if (cell.variant != agg.variant) continue;
      if (cell.diverged) {
        ++agg.diverged_cells;
      } else {
        converged.push_back(&cell);
      }
    }
    agg.converged_cells = static_cast<int>(converged.size());
    if (!converged.empty()) {
      const double n = static_cast<double>(converged.size());
      for (const CellResult* cell : converged) {
        agg.mean.delta_z += cell->loop_closure.delta_z / n;
        agg.mean.delta_xy += cell->loop_closure.delta_xy / n;
        agg.mean_rmse_z += cell->error.rmse_z / n;
        agg.mean_rmse_xyz += cell->error.rmse_xyz / n;
      }
      for (const CellResult* cell : converged) {
        const double dz = cell->loop_closure.delta_z - agg.mean.delta_z;
        const double dxy = cell->loop_closure.delta_xy - agg.mean.delta_xy;
        agg.stddev.delta_z += dz * dz / n;
        agg.stddev.delta_xy += dxy * dxy / n;
      }
      agg.stddev.delta_z = std::sqrt(agg.stddev.delta_z);
      agg.stddev.delta_xy = std::sqrt(agg.stddev.delta_xy);
    }
    report.aggregates.push_back(std::move(agg));
  }
  return report;
}

}  // namespace legslam
