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

#ifndef LEGSLAM_GEOMETRY_HPP
#define LEGSLAM_GEOMETRY_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace legslam {

/// Element of se(3). Ordering is translation-first:
/// (v_x, v_y, v_z, w_x, w_y, w_z), so index 2 is the z translation
/// component. Every diagonal noise model in the system shares this
/// ordering.
using Twist = Eigen::Matrix<double, 6, 1>;

/// Rigid-body pose in SE(3), stored as a unit quaternion plus a
/// translation. The quaternion is renormalized and sign-canonicalized
/// (w >= 0) by every constructor and operation.
class Pose3 {
 public:
  Pose3() : rotation_(Eigen::Quaterniond::Identity()),
            translation_(Eigen::Vector3d::Zero()) {}

  Pose3(const Eigen::Quaterniond& rotation, const Eigen::Vector3d& translation)
      : rotation_(rotation), translation_(translation) {
    Canonicalize();
  }

  static Pose3 Identity() { return Pose3(); }

  static Pose3 FromTranslation(double x, double y, double z) {
    return Pose3(Eigen::Quaterniond::Identity(), Eigen::Vector3d(x, y, z));
  }

  static Pose3 FromYaw(double yaw) {
    return Pose3(Eigen::Quaterniond(
                     Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ())),
                 Eigen::Vector3d::Zero());
  }

  const Eigen::Quaterniond& rotation() const { return rotation_; }
  const Eigen::Vector3d& translation() const { return translation_; }

 private:
  void Canonicalize();

  Eigen::Quaterniond rotation_;
  Eigen::Vector3d translation_;
};

/// SE(3) exponential map. Rotation via Rodrigues, translation via the
/// left-Jacobian V-matrix; 4th-order Taylor series below 1e-8 rad.
Pose3 Exp(const Twist& xi);

/// SE(3) logarithm, inverse of Exp. The rotation angle is returned in
/// [0, pi].
Twist Log(const Pose3& pose);

/// Group product a * b.
Pose3 Compose(const Pose3& a, const Pose3& b);

/// Group inverse.
Pose3 Inverse(const Pose3& pose);

/// Relative pose inverse(a) * b.
Pose3 Between(const Pose3& a, const Pose3& b);

/// Decoupled interpolation: translation by lerp, rotation by
/// shortest-arc slerp. Throws std::out_of_range unless 0 <= t <= 1.
Pose3 Interpolate(const Pose3& a, const Pose3& b, double t);

/// Right-retraction pose * Exp(delta).
Pose3 Retract(const Pose3& pose, const Twist& delta);

/// Chordal-style distance used by tests: translation norm plus the
/// rotation angle of Between(a, b).
double PoseDistance(const Pose3& a, const Pose3& b);

}  // namespace legslam

#endif  // LEGSLAM_GEOMETRY_HPP
