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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "legslam/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "legslam: dual-lane pose-graph backend with leg-odometry elevation "
      "regularization, plus a closed-loop simulation harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string variant_name = "parallel";
  std::string out_dir;
  int64_t seed_override = -1;
  bool plots = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "TOML config file");
    cmd->add_option("--out", out_dir, "output directory (overrides config)");
    cmd->add_option("--seed", seed_override,
                    "single seed (overrides the config's seed list)");
  };

  CLI::App* simulate =
      app.add_subcommand("simulate", "write simulated odometry streams");
  add_common(simulate);

  CLI::App* solve =
      app.add_subcommand("solve", "build and optimize one graph variant");
  add_common(solve);
  solve->add_option("--variant", variant_name,
                    "graph variant: baseline | serial | parallel");

  CLI::App* compare =
      app.add_subcommand("compare", "run all variants over all seeds");
  add_common(compare);
  compare->add_flag("--plots", plots, "emit elevation-profile SVG plots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : legslam::kExitUsageError;
  }

  try {
    legslam::RunConfig config = config_path.empty()
                                    ? legslam::DefaultRunConfig()
                                    : legslam::LoadRunConfig(config_path);
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (seed_override >= 0) {
      config.seeds = {static_cast<uint64_t>(seed_override)};
    }
    if (compare->parsed() && plots) config.plots = true;

    if (simulate->parsed()) {
      return legslam::CmdSimulate(config);
    }
    if (solve->parsed()) {
      return legslam::CmdSolve(config,
                               legslam::VariantFromName(variant_name));
    }
    return legslam::CmdCompare(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return legslam::kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return legslam::kExitRuntimeFailure;
  }
}
