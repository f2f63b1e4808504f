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

#include "legslam/lanes.hpp"

#include <algorithm>
#include <stdexcept>

namespace legslam {

std::string VariantName(Variant variant) {
  switch (variant) {
    case Variant::kBaseline: return "baseline";
    case Variant::kSerial: return "serial";
    case Variant::kParallel: return "parallel";
  }
  throw std::invalid_argument("VariantName: unknown variant");
}

Variant VariantFromName(const std::string& name) {
  if (name == "baseline") return Variant::kBaseline;
  if (name == "serial") return Variant::kSerial;
  if (name == "parallel") return Variant::kParallel;
  throw std::invalid_argument("unknown variant '" + name +
                              "' (expected baseline, serial or parallel)");
}

Twist LaneConfig::DefaultLidarBetweenSigmas() {
  Twist s;
  // Front-end claimed precision: tight horizontally, weak on z.
  s << 0.01, 0.01, 0.05, 0.002, 0.002, 0.002;
  return s;
}

Twist LaneConfig::DefaultFkBetweenSigmas() {
  Twist s;
  // FK is weak horizontally but its relative z tracks the contact height.
  s << 0.3, 0.3, 0.03, 0.005, 0.005, 0.005;
  return s;
}

Twist LaneConfig::DefaultAnchorSigmas() {
  return Twist::Constant(1e-3);
}

std::vector<Pose3> AlignFkToKeyframes(
    const std::vector<OdometrySample>& fk,
    const std::vector<double>& keyframe_times) {
  if (fk.empty()) {
    throw std::invalid_argument("AlignFkToKeyframes: empty FK stream");
  }
  for (std::size_t i = 1; i < fk.size(); ++i) {
    if (!(fk[i].t > fk[i - 1].t)) {
      throw std::invalid_argument(
          "AlignFkToKeyframes: FK timestamps not strictly increasing");
    }
  }

  std::vector<Pose3> aligned;
  aligned.reserve(keyframe_times.size());
  for (std::size_t k = 0; k < keyframe_times.size(); ++k) {
    const double t = keyframe_times[k];
    if (t < fk.front().t || t > fk.back().t) {
      throw std::out_of_range("AlignFkToKeyframes: keyframe " +
                              std::to_string(k) +
                              " outside the FK time range");
    }
    const auto upper = std::lower_bound(
        fk.begin(), fk.end(), t,
        [](const OdometrySample& s, double time) { return s.t < time; });
    if (upper->t == t) {
      aligned.push_back(upper->pose);
      continue;
    }
    const auto lower = upper - 1;
    const double alpha = (t - lower->t) / (upper->t - lower->t);
    aligned.push_back(Interpolate(lower->pose, upper->pose, alpha));
  }
  return aligned;
}

HybridGraph BuildGraph(const KeyframeStream& keyframes,
                       const std::vector<OdometrySample>& fk,
                       const LaneConfig& config) {
  const int n = static_cast<int>(keyframes.size());
  if (n < 2) {
    throw std::invalid_argument("BuildGraph: need at least 2 keyframes");
  }
  if (config.couple_every < 1) {
    throw std::invalid_argument("BuildGraph: couple_every must be >= 1");
  }
  for (int k = 1; k < n; ++k) {
    if (!(keyframes[k].t > keyframes[k - 1].t)) {
      throw std::invalid_argument(
          "BuildGraph: keyframe timestamps not strictly increasing");
    }
  }

  HybridGraph h;
  h.keyframe_times.reserve(n);
  for (const auto& s : keyframes) {
    h.keyframe_times.push_back(s.t);
  }

  // LiDAR lane: nodes from raw LiDAR odometry, gauge anchor on x0,
  // between factors from consecutive odometry poses.
  for (int k = 0; k < n; ++k) {
    h.x_ids.push_back(k);
    h.values.Insert(k, keyframes[k].pose);
  }
  h.graph.Add(PriorFactor{h.x_ids[0], keyframes[0].pose,
                          DiagonalNoise(config.anchor_sigmas)});
  const DiagonalNoise lidar_noise{config.lidar_between_sigmas};
  for (int k = 1; k < n; ++k) {
    h.graph.Add(BetweenFactor{h.x_ids[k - 1], h.x_ids[k],
                              Between(keyframes[k - 1].pose, keyframes[k].pose),
                              lidar_noise});
  }

  if (config.variant == Variant::kBaseline) {
    return h;
  }

  const std::vector<Pose3> fk_aligned =
      AlignFkToKeyframes(fk, h.keyframe_times);
  const DiagonalNoise fk_noise{config.fk_between_sigmas};
  const DiagonalNoise elevation_noise{
      Eigen::VectorXd::Constant(1, config.elevation_sigma)};

  if (config.variant == Variant::kSerial) {
    // FK odometry factors inserted directly into the LiDAR lane: the same
    // relative measurements, fused on the same node pairs.
    for (int k = 1; k < n; ++k) {
      h.graph.Add(BetweenFactor{h.x_ids[k - 1], h.x_ids[k],
                                Between(fk_aligned[k - 1], fk_aligned[k]),
                                fk_noise});
    }
    return h;
  }

  // Parallel kinematic lane: y nodes from aligned FK poses.
  for (int k = 0; k < n; ++k) {
    h.y_ids.push_back(n + k);
    h.values.Insert(h.y_ids[k], fk_aligned[k]);
  }
  for (int k = 1; k < n; ++k) {
    h.graph.Add(BetweenFactor{h.y_ids[k - 1], h.y_ids[k],
                              Between(fk_aligned[k - 1], fk_aligned[k]),
                              fk_noise});
  }
  for (int k = 0; k < n; ++k) {
    h.graph.Add(ElevationPriorFactor{
        h.y_ids[k], fk_aligned[k].translation().z(), elevation_noise});
  }
  for (int k = 0; k < n; k += config.couple_every) {
    h.graph.Add(MakeCouplingFactor(h.x_ids[k], h.y_ids[k], config.coupling));
  }
  return h;
}

std::vector<OdometrySample> ExtractOutputTrajectory(const HybridGraph& hybrid,
                                                    const Values& values) {
  std::vector<OdometrySample> out;
  out.reserve(hybrid.x_ids.size());
  for (std::size_t k = 0; k < hybrid.x_ids.size(); ++k) {
    out.push_back({hybrid.keyframe_times[k], values.At(hybrid.x_ids[k])});
  }
  return out;
}

}  // namespace legslam
