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

#include "legslam/commands.hpp"

#include <filesystem>
#include <iostream>

#include "legslam/svg.hpp"
#include "legslam/trajectory_io.hpp"

namespace legslam {

namespace {

namespace fs = std::filesystem;

void PrepareOutputDir(const RunConfig& config) {
  fs::create_directories(config.output_dir);
  WriteFile((fs::path(config.output_dir) / "run_config.toml").string(),
            SerializeRunConfig(config));
}

std::string OutPath(const RunConfig& config, const std::string& filename) {
  return (fs::path(config.output_dir) / filename).string();
}

std::string CsvCell(double value) { return FormatDouble(value); }

}  // namespace

std::string ComparisonCsv(const ComparisonReport& report,
                          const std::vector<std::string>& caveats) {
  std::string out;
  for (const std::string& caveat : caveats) {
    out += "# " + caveat + "\n";
  }
  out +=
      "scenario,variant,seed,delta_z_m,delta_xy_m,rmse_z_m,rmse_xyz_m,"
      "iterations,final_cost,wall_time_s,diverged\n";

  for (const CellResult& cell : report.cells) {
    out += cell.scenario + "," + cell.variant + "," +
           std::to_string(cell.seed) + ",";
    if (cell.diverged) {
      out += ",,,,";  // deltas and rmse are absent
    } else {
      out += CsvCell(cell.loop_closure.delta_z) + "," +
             CsvCell(cell.loop_closure.delta_xy) + "," +
             CsvCell(cell.error.rmse_z) + "," + CsvCell(cell.error.rmse_xyz) +
             ",";
    }
    out += std::to_string(cell.stats.iterations) + "," +
           CsvCell(cell.stats.final_cost) + "," +
           CsvCell(cell.stats.wall_time_s) + "," +
           (cell.diverged ? "true" : "false") + "\n";
  }

  for (const AggregateResult& agg : report.aggregates) {
    out += agg.scenario + "," + agg.variant + ",mean," +
           CsvCell(agg.mean.delta_z) + "," + CsvCell(agg.mean.delta_xy) + "," +
           CsvCell(agg.mean_rmse_z) + "," + CsvCell(agg.mean_rmse_xyz) +
           ",,,," + std::to_string(agg.diverged_cells) + "-diverged\n";
    out += agg.scenario + "," + agg.variant + ",std," +
           CsvCell(agg.stddev.delta_z) + "," + CsvCell(agg.stddev.delta_xy) +
           ",,,,,,\n";
  }
  return out;
}

std::string ElevationProfileCsv(
    const std::vector<ElevationProfilePoint>& profile) {
  std::string out = "index,z_est_m,z_true_m\n";
  for (const auto& p : profile) {
    out += std::to_string(p.index) + "," + FormatDouble(p.z_estimated) + "," +
           FormatDouble(p.z_true) + "\n";
  }
  return out;
}

int CmdSimulate(const RunConfig& config) {
  RunConfig used = config;
  used.seeds = {config.seeds.front()};
  PrepareOutputDir(used);

  const SimulatedRun run =
      Simulate(used.scenario, used.noise, used.seeds.front());
  const std::string tag =
      used.scenario.name + " seed " + std::to_string(used.seeds.front());
  WriteTum(OutPath(used, "ground_truth.tum"), run.ground_truth,
           "ground truth, " + tag);
  WriteTum(OutPath(used, "lidar_odometry.tum"), run.lidar_odom,
           "lidar odometry, " + tag);
  WriteTum(OutPath(used, "fk_odometry.tum"), run.fk_odom,
           "fk odometry, " + tag);
  return kExitSuccess;
}

int CmdSolve(const RunConfig& config, Variant variant) {
  RunConfig used = config;
  used.seeds = {config.seeds.front()};
  used.variants = {variant};
  PrepareOutputDir(used);

  const SimulatedRun run =
      Simulate(used.scenario, used.noise, used.seeds.front());
  LaneConfig lane = used.lane;
  lane.variant = variant;

  HybridGraph hybrid = BuildGraph(run.lidar_odom, run.fk_odom, lane);
  auto [values, stats] = Optimize(hybrid.graph, hybrid.values, used.solver);
  const auto trajectory = ExtractOutputTrajectory(hybrid, values);
  const auto profile = ElevationProfile(trajectory, run.ground_truth);

  const std::string name = VariantName(variant);
  WriteTum(OutPath(used, "trajectory_" + name + ".tum"), trajectory,
           "estimated trajectory, variant " + name);
  WriteFile(OutPath(used, "elevation_profile_" + name + ".csv"),
            ElevationProfileCsv(profile));

  std::string stats_text;
  stats_text += "variant = \"" + name + "\"\n";
  stats_text += "iterations = " + std::to_string(stats.iterations) + "\n";
  stats_text += "initial_cost = " + FormatDouble(stats.initial_cost) + "\n";
  stats_text += "final_cost = " + FormatDouble(stats.final_cost) + "\n";
  stats_text +=
      std::string("converged = ") + (stats.converged ? "true" : "false") + "\n";
  stats_text += "wall_time_s = " + FormatDouble(stats.wall_time_s) + "\n";
  WriteFile(OutPath(used, "solve_stats_" + name + ".toml"), stats_text);

  if (!stats.converged) {
    std::cerr << "solve: variant " << name << " did not converge after "
              << stats.iterations << " iterations\n";
    return kExitRuntimeFailure;
  }
  return kExitSuccess;
}

int CmdCompare(const RunConfig& config) {
  PrepareOutputDir(config);

  const ComparisonReport report = CompareVariants(
      config.scenario, config.noise, config.LaneConfigs(), config.seeds,
      config.solver);

  std::vector<std::string> caveats;
  if (config.scenario.name == "cocopark") {
    caveats.push_back(
        "cocopark caveat: on the real system the baseline front-end "
        "diverged and crashed; a pose-graph simulation cannot reproduce a "
        "front-end crash, so the baseline cell reports the accumulated "
        "elevation drift instead.");
  }
  WriteFile(OutPath(config, "comparison.csv"), ComparisonCsv(report, caveats));

  if (config.plots) {
    // One profile per variant, rendered from the first seed's run.
    const SimulatedRun run =
        Simulate(config.scenario, config.noise, config.seeds.front());
    for (const LaneConfig& lane : config.LaneConfigs()) {
      try {
        HybridGraph hybrid = BuildGraph(run.lidar_odom, run.fk_odom, lane);
        auto [values, stats] =
            Optimize(hybrid.graph, hybrid.values, config.solver);
        const auto profile = ElevationProfile(
            ExtractOutputTrajectory(hybrid, values), run.ground_truth);
        const std::string name = VariantName(lane.variant);
        WriteFile(OutPath(config, "elevation_" + config.scenario.name + "_" +
                                      name + ".svg"),
                  ElevationProfileSvg(profile,
                                      config.scenario.name + " / " + name));
      } catch (const std::exception& e) {
        std::cerr << "plot skipped for variant "
                  << VariantName(lane.variant) << ": " << e.what() << "\n";
      }
    }
  }

  bool any_converged = false;
  for (const CellResult& cell : report.cells) {
    if (!cell.diverged) any_converged = true;
  }
  return any_converged ? kExitSuccess : kExitRuntimeFailure;
}

}  // namespace legslam
