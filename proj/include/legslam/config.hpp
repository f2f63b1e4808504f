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

#ifndef LEGSLAM_CONFIG_HPP
#define LEGSLAM_CONFIG_HPP

#include <string>
#include <vector>

#include "legslam/eval.hpp"

namespace legslam {

/// Fully expanded run description. Loading a config file resolves the
/// scenario preset so the serialized form is always explicit.
struct RunConfig {
  ScenarioSpec scenario;
  SensorNoiseSpec noise;
  LaneConfig lane;  // sigma set shared by all variants
  std::vector<Variant> variants = {Variant::kBaseline, Variant::kSerial,
                                   Variant::kParallel};
  SolverSettings solver;
  std::vector<uint64_t> seeds = {1, 2, 3, 4, 5};
  std::string output_dir = "out";
  bool plots = false;

  /// One LaneConfig per requested variant, sharing this config's
  /// sigma set.
  std::vector<LaneConfig> LaneConfigs() const;
};

/// Defaults for a named scenario preset, including the preset's
/// injected LiDAR z bias (factory 0.1 m, cocopark 0.12 m per keyframe).
RunConfig DefaultRunConfig(const std::string& preset = "factory");

/// Parses the TOML config. Unknown keys are hard errors; a scenario
/// preset is expanded and individual scenario keys may override it.
RunConfig ParseRunConfig(const std::string& text);
RunConfig LoadRunConfig(const std::string& path);

/// Fully explicit TOML, suitable for re-loading. Includes the format
/// version and RNG algorithm identifier.
std::string SerializeRunConfig(const RunConfig& config);

}  // namespace legslam

#endif  // LEGSLAM_CONFIG_HPP
