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

#include <cmath>
#include <random>

#include <doctest.h>

#include "legslam/geometry.hpp"

namespace legslam {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Test-only oracle: numeric matrix exponential of the 4x4 twist matrix
// by scaling and squaring with a truncated Taylor series.
Eigen::Matrix4d MatrixExpOracle(const Twist& xi) {
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  a(0, 1) = -xi(5); a(0, 2) = xi(4);
  a(1, 0) = xi(5);  a(1, 2) = -xi(3);
  a(2, 0) = -xi(4); a(2, 1) = xi(3);
  a(0, 3) = xi(0);  a(1, 3) = xi(1); a(2, 3) = xi(2);

  const int squarings = 10;
  a /= std::pow(2.0, squarings);
  Eigen::Matrix4d result = Eigen::Matrix4d::Identity();
  Eigen::Matrix4d term = Eigen::Matrix4d::Identity();
  for (int k = 1; k <= 20; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < squarings; ++i) {
    result = result * result;
  }
  return result;
}

Eigen::Matrix4d Homogeneous(const Pose3& p) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = p.rotation().toRotationMatrix();
  m.topRightCorner<3, 1>() = p.translation();
  return m;
}

// Test-only slerp from the closed-form formula.
Eigen::Quaterniond SlerpOracle(Eigen::Quaterniond a, Eigen::Quaterniond b,
                               double t) {
  double dot = a.dot(b);
  if (dot < 0.0) {
    b.coeffs() = -b.coeffs();
    dot = -dot;
  }
  const double omega = std::acos(std::min(dot, 1.0));
  if (omega < 1e-12) return a;
  const double sa = std::sin((1.0 - t) * omega) / std::sin(omega);
  const double sb = std::sin(t * omega) / std::sin(omega);
  Eigen::Quaterniond out;
  out.coeffs() = sa * a.coeffs() + sb * b.coeffs();
  out.normalize();
  return out;
}

Twist MakeTwist(double a, double b, double c, double d, double e, double f) {
  Twist xi;
  xi << a, b, c, d, e, f;
  return xi;
}

Pose3 RandomPose(std::mt19937_64& rng, double max_angle = kPi - 1e-3) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Twist xi = MakeTwist(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
  xi.tail<3>() *= max_angle / std::sqrt(3.0);
  xi.head<3>() *= 5.0;
  return Exp(xi);
}

TEST_CASE("exp of the zero twist is the identity") {
  const Pose3 p = Exp(Twist::Zero());
  CHECK(p.translation().norm() == 0.0);
  CHECK(p.rotation().angularDistance(Eigen::Quaterniond::Identity()) == 0.0);
}

TEST_CASE("exp of a pure translation has V = I") {
  const Pose3 p = Exp(MakeTwist(1, 2, 3, 0, 0, 0));
  CHECK(p.rotation().angularDistance(Eigen::Quaterniond::Identity()) == 0.0);
  CHECK(p.translation().isApprox(Eigen::Vector3d(1, 2, 3), 1e-15));
}

TEST_CASE("exp matches the matrix-exponential oracle") {
  const Twist xi = MakeTwist(1, 0, 0, 0, 0, kPi / 2);
  const Eigen::Matrix4d expected = MatrixExpOracle(xi);
  CHECK((Homogeneous(Exp(xi)) - expected).cwiseAbs().maxCoeff() <= 1e-9);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const Twist random = MakeTwist(u(rng), u(rng), u(rng),
                                   u(rng) / 2, u(rng) / 2, u(rng) / 2);
    CHECK((Homogeneous(Exp(random)) - MatrixExpOracle(random))
              .cwiseAbs()
              .maxCoeff() <= 1e-9);
  }
}

TEST_CASE("log of the identity is the zero twist") {
  CHECK(Log(Pose3::Identity()).norm() == 0.0);
}

TEST_CASE("log of a pure translation") {
  const Twist xi = Log(Pose3::FromTranslation(0, 0, 5));
  CHECK((xi - MakeTwist(0, 0, 5, 0, 0, 0)).norm() <= 1e-15);
}

TEST_CASE("log(exp(xi)) round-trips over the principal domain") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double max_error = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Twist xi = MakeTwist(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
    xi.head<3>() *= 10.0;
    Eigen::Vector3d w = xi.tail<3>();
    const double scale = (kPi - 1e-3) * std::abs(u(rng));
    if (w.norm() > 0.0) w *= scale / w.norm();
    xi.tail<3>() = w;
    max_error = std::max(max_error, (Log(Exp(xi)) - xi).norm());
  }
  CHECK(max_error <= 1e-9);
}

TEST_CASE("log handles rotations near pi") {
  for (double angle : {kPi - 1e-6, kPi - 1e-9, kPi}) {
    Twist xi = MakeTwist(0.3, -0.2, 0.1, 0, 0, angle);
    const Twist back = Log(Exp(xi));
    CHECK((back - xi).norm() <= 1e-8);
  }
}

TEST_CASE("small-angle twists round-trip through the Taylor branches") {
  for (double angle : {0.0, 1e-12, 1e-9, 1e-8, 1e-7}) {
    const Twist xi = MakeTwist(1, -2, 0.5, angle, angle / 2, -angle);
    CHECK((Log(Exp(xi)) - xi).norm() <= 1e-12);
  }
}

TEST_CASE("compose identity and inverse laws") {
  std::mt19937_64 rng(3);
  const Pose3 p = RandomPose(rng);
  CHECK(PoseDistance(Compose(Pose3::Identity(), p), p) <= 1e-15);
  CHECK(PoseDistance(Compose(p, Inverse(p)), Pose3::Identity()) <= 1e-12);
  CHECK(PoseDistance(Inverse(Inverse(p)), p) <= 1e-12);
  CHECK(PoseDistance(Compose(Inverse(p), p), Pose3::Identity()) <= 1e-12);
}

TEST_CASE("compose matches the homogeneous-matrix oracle") {
  const Pose3 tz90 = Pose3::FromYaw(kPi / 2);
  const Pose3 tx1 = Pose3::FromTranslation(1, 0, 0);
  const Pose3 c = Compose(tz90, tx1);
  CHECK(c.translation().isApprox(Eigen::Vector3d(0, 1, 0), 1e-12));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Pose3 a = RandomPose(rng);
    const Pose3 b = RandomPose(rng);
    const Eigen::Matrix4d expected = Homogeneous(a) * Homogeneous(b);
    CHECK((Homogeneous(Compose(a, b)) - expected).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Pose3 a = RandomPose(rng);
    const Pose3 b = RandomPose(rng);
    const Pose3 c = RandomPose(rng);
    CHECK(PoseDistance(Compose(Compose(a, b), c), Compose(a, Compose(b, c))) <=
          1e-12);
  }
}

TEST_CASE("inverse of a pure translation negates it") {
  const Pose3 inv = Inverse(Pose3::FromTranslation(1, 2, 3));
  CHECK(inv.translation().isApprox(Eigen::Vector3d(-1, -2, -3), 1e-15));
  CHECK(PoseDistance(Inverse(Pose3::Identity()), Pose3::Identity()) == 0.0);
}

TEST_CASE("between is the relative pose") {
  std::mt19937_64 rng(17);
  const Pose3 a = RandomPose(rng);
  const Pose3 b = RandomPose(rng);
  CHECK(PoseDistance(Between(a, a), Pose3::Identity()) <= 1e-12);
  CHECK(PoseDistance(Between(Pose3::Identity(), b), b) <= 1e-15);
  CHECK(PoseDistance(Compose(a, Between(a, b)), b) <= 1e-12);
}

TEST_CASE("interpolate endpoints and degenerate pair") {
  std::mt19937_64 rng(19);
  const Pose3 a = RandomPose(rng);
  const Pose3 b = RandomPose(rng);
  CHECK(PoseDistance(Interpolate(a, b, 0.0), a) <= 1e-12);
  CHECK(PoseDistance(Interpolate(a, b, 1.0), b) <= 1e-12);
  CHECK(PoseDistance(Interpolate(a, a, 0.5), a) <= 1e-12);
}

TEST_CASE("interpolate rejects t outside [0, 1]") {
  const Pose3 p = Pose3::FromTranslation(1, 0, 0);
  CHECK_THROWS_AS(Interpolate(p, p, -0.01), std::out_of_range);
  CHECK_THROWS_AS(Interpolate(p, p, 1.01), std::out_of_range);
}

TEST_CASE("interpolate midpoint matches the slerp oracle") {
  const Pose3 a = Pose3::Identity();
  const Pose3 b = Pose3(Eigen::Quaterniond(Eigen::AngleAxisd(
                            kPi / 2, Eigen::Vector3d::UnitZ())),
                        Eigen::Vector3d(2, 0, 0));
  const Pose3 mid = Interpolate(a, b, 0.5);
  CHECK(mid.translation().isApprox(Eigen::Vector3d(1, 0, 0), 1e-12));
  const Eigen::Quaterniond expected =
      SlerpOracle(a.rotation(), b.rotation(), 0.5);
  CHECK(mid.rotation().angularDistance(expected) <= 1e-12);
  CHECK(mid.rotation().angularDistance(Eigen::Quaterniond(Eigen::AngleAxisd(
            kPi / 4, Eigen::Vector3d::UnitZ()))) <= 1e-12);
}

TEST_CASE("interpolate is symmetric under argument swap") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Pose3 a = RandomPose(rng);
    const Pose3 b = RandomPose(rng);
    const double t = u(rng);
    CHECK(Interpolate(a, b, t).rotation().angularDistance(
              Interpolate(b, a, 1.0 - t).rotation()) <= 1e-12);
  }
}

TEST_CASE("operations are deterministic") {
  std::mt19937_64 rng(29);
  const Pose3 a = RandomPose(rng);
  const Pose3 b = RandomPose(rng);
  const Pose3 c1 = Compose(a, b);
  const Pose3 c2 = Compose(a, b);
  CHECK(c1.translation() == c2.translation());
  CHECK(c1.rotation().coeffs() == c2.rotation().coeffs());
  CHECK(Log(a) == Log(a));
}

TEST_CASE("quaternion sign is canonicalized") {
  const Eigen::Quaterniond flipped(-1.0, 0.0, 0.0, 0.0);
  const Pose3 p(flipped, Eigen::Vector3d::Zero());
  CHECK(p.rotation().w() == 1.0);

  // Full-turn yaw lands on the canonical identity.
  const Pose3 turn = Exp(MakeTwist(0, 0, 0, 0, 0, 2 * kPi - 1e-12));
  CHECK(turn.rotation().w() >= 0.0);
}

}  // namespace
}  // namespace legslam
