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

#ifndef LEGSLAM_LANES_HPP
#define LEGSLAM_LANES_HPP

#include <string>
#include <vector>

#include "legslam/solver.hpp"

namespace legslam {

struct OdometrySample {
  double t = 0.0;  // seconds, strictly increasing within a stream
  Pose3 pose;      // in the stream's own odometry frame
};

/// LiDAR-lane input: odometry at keyframe cadence, >= 2 samples.
using KeyframeStream = std::vector<OdometrySample>;

enum class Variant { kBaseline, kSerial, kParallel };

std::string VariantName(Variant variant);
Variant VariantFromName(const std::string& name);  // throws invalid_argument

struct LaneConfig {
  Variant variant = Variant::kParallel;
  Twist lidar_between_sigmas = DefaultLidarBetweenSigmas();
  Twist fk_between_sigmas = DefaultFkBetweenSigmas();
  CouplingSigmas coupling = CouplingSigmas::Default();
  double elevation_sigma = 0.05;  // meters
  Twist anchor_sigmas = DefaultAnchorSigmas();
  int couple_every = 1;  // keyframe stride for coupling factors

  static Twist DefaultLidarBetweenSigmas();
  static Twist DefaultFkBetweenSigmas();
  static Twist DefaultAnchorSigmas();
};

/// Graph plus initial values plus the keyframe -> node-id maps of both
/// lanes. y_ids is empty unless the variant is parallel.
struct HybridGraph {
  Graph graph;
  Values values;
  std::vector<NodeId> x_ids;
  std::vector<NodeId> y_ids;
  std::vector<double> keyframe_times;
};

/// For each keyframe time, the FK stream interpolated at that time
/// (lerp + slerp between the bracketing samples). Throws
/// std::out_of_range when a keyframe time falls outside the FK time
/// range, std::invalid_argument on unsorted input.
std::vector<Pose3> AlignFkToKeyframes(const std::vector<OdometrySample>& fk,
                                      const std::vector<double>& keyframe_times);

/// Builds the requested graph variant from the two odometry streams.
/// FK input is ignored for the baseline variant.
HybridGraph BuildGraph(const KeyframeStream& keyframes,
                       const std::vector<OdometrySample>& fk,
                       const LaneConfig& config);

/// The published trajectory: LiDAR-lane nodes only, in time order.
std::vector<OdometrySample> ExtractOutputTrajectory(const HybridGraph& hybrid,
                                                    const Values& values);

}  // namespace legslam

#endif  // LEGSLAM_LANES_HPP
