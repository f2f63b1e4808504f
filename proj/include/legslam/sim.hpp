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

#ifndef LEGSLAM_SIM_HPP
#define LEGSLAM_SIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "legslam/lanes.hpp"

namespace legslam {

enum class LoopShape { kCircle, kRoundedRectangle };

std::string LoopShapeName(LoopShape shape);
LoopShape LoopShapeFromName(const std::string& name);

/// Closed-loop scenario. The ground-truth elevation profile is one
/// sinusoid period along arc length with the given peak-to-peak
/// amplitude.
struct ScenarioSpec {
  std::string name = "factory";
  LoopShape loop = LoopShape::kRoundedRectangle;
  double path_length = 700.0;       // meters
  double relief_amplitude = 4.0;    // meters, peak-to-peak
  double keyframe_spacing = 2.0;    // meters
  double fk_rate = 50.0;            // Hz
  double speed = 1.5;               // m/s
  uint64_t seed = 1;

  void Validate() const;  // throws std::invalid_argument

  static ScenarioSpec Factory();
  static ScenarioSpec CocoPark();
  /// Throws std::invalid_argument for unknown preset names.
  static ScenarioSpec Preset(const std::string& name);
};

struct SensorNoiseSpec {
  double lidar_z_bias_per_keyframe = 0.1;  // meters, systematic
  Twist lidar_white_sigmas = DefaultLidarWhiteSigmas();
  Twist fk_white_sigmas = DefaultFkWhiteSigmas();
  double fk_z_sigma = 0.02;  // meters

  void Validate() const;

  static Twist DefaultLidarWhiteSigmas();
  static Twist DefaultFkWhiteSigmas();
  static SensorNoiseSpec Noiseless();
};

struct SimulatedRun {
  std::vector<OdometrySample> ground_truth;  // at keyframe cadence
  KeyframeStream lidar_odom;
  std::vector<OdometrySample> fk_odom;
};

/// Identifier of the pseudo-random generation scheme, recorded in run
/// metadata for reproducibility bookkeeping.
std::string RngAlgorithmId();

/// Keyframed poses along the closed loop: first pose is the identity,
/// the final keyframe returns exactly to the start, timestamps follow
/// from constant speed. The keyframe count is
/// round(path_length / keyframe_spacing) + 1 so the loop closes on an
/// exact sample.
std::vector<OdometrySample> GenerateGroundTruth(const ScenarioSpec& spec);

/// Ground truth interpolated at an arbitrary time within the mission.
Pose3 GroundTruthAt(const std::vector<OdometrySample>& gt, double t);

/// Corrupts each ground-truth relative step with the systematic z bias
/// plus white noise, then re-accumulates from the true start pose.
KeyframeStream SimulateLidarOdometry(const std::vector<OdometrySample>& gt,
                                     const SensorNoiseSpec& noise,
                                     uint64_t seed);

/// Dense FK stream at fk_rate: relative steps carry white noise that
/// accumulates, while the z component is re-anchored to the true
/// elevation with per-sample noise (contact-constrained height).
std::vector<OdometrySample> SimulateFkOdometry(
    const std::vector<OdometrySample>& gt, const ScenarioSpec& spec,
    const SensorNoiseSpec& noise, uint64_t seed);

SimulatedRun Simulate(const ScenarioSpec& spec, const SensorNoiseSpec& noise,
                      uint64_t seed);

}  // namespace legslam

#endif  // LEGSLAM_SIM_HPP
