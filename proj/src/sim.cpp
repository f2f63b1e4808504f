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

#include "legslam/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace legslam {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Planar position and heading at arc length s along the closed loop.
struct CurvePoint {
  double x;
  double y;
  double yaw;
};

CurvePoint CirclePoint(double s, double length) {
  const double radius = length / (2.0 * kPi);
  const double theta = s / radius;
  return {radius * std::sin(theta), radius * (1.0 - std::cos(theta)), theta};
}

// Rounded rectangle with 2:1 straights and corner radius length/20,
// walked counter-clockwise from the origin heading +x.
CurvePoint RoundedRectanglePoint(double s, double length) {
  const double r = length / 20.0;
  const double short_straight = (length - 2.0 * kPi * r) / 6.0;
  const double long_straight = 2.0 * short_straight;
  const double corner = 0.5 * kPi * r;

  const double seg_len[8] = {long_straight, corner, short_straight, corner,
                             long_straight, corner, short_straight, corner};

  double x = 0.0, y = 0.0, yaw = 0.0;
  double remaining = s;
  for (int i = 0; i < 8; ++i) {
    const double take = std::min(remaining, seg_len[i]);
    if (i % 2 == 0) {
      x += take * std::cos(yaw);
      y += take * std::sin(yaw);
    } else {
      const double phi = take / r;
      // Left turn: displacement in the heading-aligned frame.
      const double lx = r * std::sin(phi);
      const double ly = r * (1.0 - std::cos(phi));
      x += lx * std::cos(yaw) - ly * std::sin(yaw);
      y += lx * std::sin(yaw) + ly * std::cos(yaw);
      yaw += phi;
    }
    remaining -= take;
    if (remaining <= 0.0) break;
  }
  return {x, y, yaw};
}

CurvePoint LoopPoint(LoopShape shape, double s, double length) {
  return shape == LoopShape::kCircle ? CirclePoint(s, length)
                                     : RoundedRectanglePoint(s, length);
}

std::mt19937_64 MakeRng(uint64_t seed, uint32_t stream_tag) {
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32), stream_tag};
  return std::mt19937_64(seq);
}

Twist DrawTwist(std::mt19937_64& rng, std::normal_distribution<double>& unit,
                const Twist& sigmas) {
  Twist e;
  for (int i = 0; i < 6; ++i) {
    e(i) = sigmas(i) * unit(rng);
  }
  return e;
}

}  // namespace

std::string LoopShapeName(LoopShape shape) {
  return shape == LoopShape::kCircle ? "circle" : "rounded-rectangle";
}

LoopShape LoopShapeFromName(const std::string& name) {
  if (name == "circle") return LoopShape::kCircle;
  if (name == "rounded-rectangle") return LoopShape::kRoundedRectangle;
  throw std::invalid_argument("unknown loop shape '" + name +
                              "' (expected circle or rounded-rectangle)");
}

void ScenarioSpec::Validate() const {
  if (!(path_length > 0.0)) {
    throw std::invalid_argument("scenario: path_length must be positive");
  }
  if (!(keyframe_spacing > 0.0)) {
    throw std::invalid_argument("scenario: keyframe_spacing must be positive");
  }
  if (keyframe_spacing >= path_length) {
    throw std::invalid_argument(
        "scenario: keyframe_spacing must be smaller than path_length");
  }
  if (!(speed > 0.0)) {
    throw std::invalid_argument("scenario: speed must be positive");
  }
  if (relief_amplitude < 0.0) {
    throw std::invalid_argument("scenario: relief_amplitude must be >= 0");
  }
  if (!(fk_rate >= speed / keyframe_spacing)) {
    throw std::invalid_argument(
        "scenario: fk_rate must be at least the keyframe rate");
  }
}

ScenarioSpec ScenarioSpec::Factory() {
  ScenarioSpec s;
  s.name = "factory";
  s.loop = LoopShape::kRoundedRectangle;
  s.path_length = 700.0;
  s.relief_amplitude = 4.0;
  s.keyframe_spacing = 2.0;
  s.fk_rate = 50.0;
  s.speed = 1.5;
  return s;
}

ScenarioSpec ScenarioSpec::CocoPark() {
  ScenarioSpec s;
  s.name = "cocopark";
  s.loop = LoopShape::kCircle;
  s.path_length = 600.0;
  s.relief_amplitude = 15.0;
  s.keyframe_spacing = 2.0;
  s.fk_rate = 50.0;
  s.speed = 1.5;
  return s;
}

ScenarioSpec ScenarioSpec::Preset(const std::string& name) {
  if (name == "factory") return Factory();
  if (name == "cocopark") return CocoPark();
  throw std::invalid_argument("unknown scenario preset '" + name +
                              "' (expected factory or cocopark)");
}

void SensorNoiseSpec::Validate() const {
  if (lidar_z_bias_per_keyframe < 0.0 || fk_z_sigma < 0.0 ||
      (lidar_white_sigmas.array() < 0.0).any() ||
      (fk_white_sigmas.array() < 0.0).any()) {
    throw std::invalid_argument("noise: entries must be non-negative");
  }
}

Twist SensorNoiseSpec::DefaultLidarWhiteSigmas() {
  Twist s;
  s << 0.01, 0.01, 0.01, 0.001, 0.001, 0.001;
  return s;
}

Twist SensorNoiseSpec::DefaultFkWhiteSigmas() {
  Twist s;
  s << 0.002, 0.002, 0.02, 0.0005, 0.0005, 0.0005;
  return s;
}

SensorNoiseSpec SensorNoiseSpec::Noiseless() {
  SensorNoiseSpec n;
  n.lidar_z_bias_per_keyframe = 0.0;
  n.lidar_white_sigmas = Twist::Zero();
  n.fk_white_sigmas = Twist::Zero();
  n.fk_z_sigma = 0.0;
  return n;
}

std::string RngAlgorithmId() {
  return "mt19937_64+std::normal_distribution";
}

std::vector<OdometrySample> GenerateGroundTruth(const ScenarioSpec& spec) {
  spec.Validate();
  const long steps = std::lround(spec.path_length / spec.keyframe_spacing);
  if (steps < 1) {
    throw std::invalid_argument("scenario: fewer than 2 keyframes");
  }
  const double ds = spec.path_length / static_cast<double>(steps);

  std::vector<OdometrySample> gt;
  gt.reserve(steps + 1);
  for (long k = 0; k <= steps; ++k) {
    const double s = static_cast<double>(k) * ds;
    const CurvePoint p = LoopPoint(spec.loop, s, spec.path_length);
    const double z = 0.5 * spec.relief_amplitude *
                     std::sin(2.0 * kPi * s / spec.path_length);
    gt.push_back({s / spec.speed,
                  Pose3(Eigen::Quaterniond(Eigen::AngleAxisd(
                            p.yaw, Eigen::Vector3d::UnitZ())),
                        Eigen::Vector3d(p.x, p.y, z))});
  }
  return gt;
}

Pose3 GroundTruthAt(const std::vector<OdometrySample>& gt, double t) {
  if (gt.empty() || t < gt.front().t || t > gt.back().t) {
    throw std::out_of_range("GroundTruthAt: time outside the trajectory");
  }
  const auto upper = std::lower_bound(
      gt.begin(), gt.end(), t,
      [](const OdometrySample& s, double time) { return s.t < time; });
  if (upper->t == t) return upper->pose;
  const auto lower = upper - 1;
  return Interpolate(lower->pose, upper->pose,
                     (t - lower->t) / (upper->t - lower->t));
}

KeyframeStream SimulateLidarOdometry(const std::vector<OdometrySample>& gt,
                                     const SensorNoiseSpec& noise,
                                     uint64_t seed) {
  noise.Validate();
  auto rng = MakeRng(seed, 0x11DA);
  std::normal_distribution<double> unit(0.0, 1.0);

  Twist bias = Twist::Zero();
  bias(2) = noise.lidar_z_bias_per_keyframe;

  KeyframeStream stream;
  stream.reserve(gt.size());
  stream.push_back(gt.front());
  for (std::size_t k = 1; k < gt.size(); ++k) {
    const Pose3 true_step = Between(gt[k - 1].pose, gt[k].pose);
    const Twist corruption = bias + DrawTwist(rng, unit, noise.lidar_white_sigmas);
    stream.push_back(
        {gt[k].t, Compose(stream.back().pose,
                          Compose(true_step, Exp(corruption)))});
  }
  return stream;
}

std::vector<OdometrySample> SimulateFkOdometry(
    const std::vector<OdometrySample>& gt, const ScenarioSpec& spec,
    const SensorNoiseSpec& noise, uint64_t seed) {
  noise.Validate();
  auto rng = MakeRng(seed, 0xF00D);
  std::normal_distribution<double> unit(0.0, 1.0);

  std::vector<OdometrySample> stream;
  stream.push_back(gt.front());
  Pose3 prev_true = gt.front().pose;
  // Each keyframe interval is subdivided so that keyframe times land on
  // exact samples; the sub-step count keeps the cadence at ~fk_rate.
  for (std::size_t k = 1; k < gt.size(); ++k) {
    const double t0 = gt[k - 1].t;
    const double t1 = gt[k].t;
    const long m = std::max(1L, std::lround((t1 - t0) * spec.fk_rate));
    for (long j = 1; j <= m; ++j) {
      const double t =
          j == m ? t1 : t0 + static_cast<double>(j) * (t1 - t0) / m;
      const Pose3 cur_true = j == m ? gt[k].pose : GroundTruthAt(gt, t);

      const Twist white = DrawTwist(rng, unit, noise.fk_white_sigmas);
      const double z_noise = noise.fk_z_sigma * unit(rng);

      Pose3 next = Compose(stream.back().pose,
                           Compose(Between(prev_true, cur_true), Exp(white)));
      // Contact-constrained height: z does not accumulate.
      Eigen::Vector3d trans = next.translation();
      trans.z() = cur_true.translation().z() + z_noise;
      stream.push_back({t, Pose3(next.rotation(), trans)});
      prev_true = cur_true;
    }
  }
  return stream;
}

SimulatedRun Simulate(const ScenarioSpec& spec, const SensorNoiseSpec& noise,
                      uint64_t seed) {
  SimulatedRun run;
  run.ground_truth = GenerateGroundTruth(spec);
  run.lidar_odom = SimulateLidarOdometry(run.ground_truth, noise, seed);
  run.fk_odom = SimulateFkOdometry(run.ground_truth, spec, noise, seed);
  return run;
}

}  // namespace legslam
