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

#include "legslam/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace legslam {

namespace {

constexpr double kSmallAngle = 1e-8;

// Below this angle the closed forms of the cancellation-prone V-matrix
// coefficients lose precision to roundoff; their series are exact to
// machine precision there.
constexpr double kCoeffSeries = 1e-4;

Eigen::Matrix3d Skew(const Eigen::Vector3d& w) {
  Eigen::Matrix3d s;
  s << 0.0, -w.z(), w.y(),
       w.z(), 0.0, -w.x(),
       -w.y(), w.x(), 0.0;
  return s;
}

// Left Jacobian of SO(3): V = I + a*[w]x + b*[w]x^2 with
// a = (1 - cos t)/t^2, b = (t - sin t)/t^3.
Eigen::Matrix3d LeftJacobian(const Eigen::Vector3d& w) {
  const double theta = w.norm();
  const double t2 = theta * theta;
  double a, b;
  if (theta < kSmallAngle) {
    a = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  } else {
    // 1 - cos t = 2 sin^2(t/2), stable for small t.
    const double sh = std::sin(0.5 * theta);
    a = 2.0 * sh * sh / t2;
  }
  if (theta < kCoeffSeries) {
    b = 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0;
  } else {
    b = (theta - std::sin(theta)) / (t2 * theta);
  }
  const Eigen::Matrix3d wx = Skew(w);
  return Eigen::Matrix3d::Identity() + a * wx + b * wx * wx;
}

Eigen::Matrix3d LeftJacobianInverse(const Eigen::Vector3d& w) {
  const double theta = w.norm();
  const double t2 = theta * theta;
  double c;
  if (theta < kCoeffSeries) {
    c = 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0;
  } else {
    // 1 - (t/2) cot(t/2), written with half-angle terms to avoid the
    // 1 - cos t cancellation.
    const double half = 0.5 * theta;
    c = (1.0 - half * std::cos(half) / std::sin(half)) / t2;
  }
  const Eigen::Matrix3d wx = Skew(w);
  return Eigen::Matrix3d::Identity() - 0.5 * wx + c * wx * wx;
}

}  // namespace

void Pose3::Canonicalize() {
  rotation_.normalize();
  const auto& c = rotation_.coeffs();  // (x, y, z, w)
  bool flip = c(3) < 0.0;
  if (c(3) == 0.0) {
    // Sign of a 180-degree rotation is fixed by the first nonzero
    // vector component so serialization stays deterministic.
    for (int i = 0; i < 3; ++i) {
      if (c(i) != 0.0) {
        flip = c(i) < 0.0;
        break;
      }
    }
  }
  if (flip) {
    rotation_.coeffs() = -rotation_.coeffs();
  }
}

Pose3 Exp(const Twist& xi) {
  const Eigen::Vector3d v = xi.head<3>();
  const Eigen::Vector3d w = xi.tail<3>();
  const double theta = w.norm();

  Eigen::Quaterniond q;
  if (theta < kSmallAngle) {
    const double t2 = theta * theta;
    // sin(t/2)/t and cos(t/2) Taylor series.
    const double s = 0.5 - t2 / 48.0 + t2 * t2 / 3840.0;
    q = Eigen::Quaterniond(1.0 - t2 / 8.0 + t2 * t2 / 384.0,
                           s * w.x(), s * w.y(), s * w.z());
  } else {
    q = Eigen::Quaterniond(Eigen::AngleAxisd(theta, w / theta));
  }
  return Pose3(q, LeftJacobian(w) * v);
}

Twist Log(const Pose3& pose) {
  const Eigen::Quaterniond& q = pose.rotation();
  const Eigen::Vector3d vec(q.x(), q.y(), q.z());
  const double n = vec.norm();
  const double angle = 2.0 * std::atan2(n, q.w());

  Eigen::Vector3d w;
  if (n < kSmallAngle) {
    // angle/sin(angle/2) -> 2 as angle -> 0.
    w = 2.0 * vec;
  } else {
    w = (angle / n) * vec;
  }

  Twist xi;
  xi.head<3>() = LeftJacobianInverse(w) * pose.translation();
  xi.tail<3>() = w;
  return xi;
}

Pose3 Compose(const Pose3& a, const Pose3& b) {
  return Pose3(a.rotation() * b.rotation(),
               a.translation() + a.rotation() * b.translation());
}

Pose3 Inverse(const Pose3& pose) {
  const Eigen::Quaterniond inv = pose.rotation().conjugate();
  return Pose3(inv, -(inv * pose.translation()));
}

Pose3 Between(const Pose3& a, const Pose3& b) {
  return Compose(Inverse(a), b);
}

Pose3 Interpolate(const Pose3& a, const Pose3& b, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::out_of_range("Interpolate: t must be in [0, 1]");
  }
  return Pose3(a.rotation().slerp(t, b.rotation()),
               (1.0 - t) * a.translation() + t * b.translation());
}

Pose3 Retract(const Pose3& pose, const Twist& delta) {
  return Compose(pose, Exp(delta));
}

double PoseDistance(const Pose3& a, const Pose3& b) {
  const Pose3 d = Between(a, b);
  return d.translation().norm() + a.rotation().angularDistance(b.rotation());
}

}  // namespace legslam
