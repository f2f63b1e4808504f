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

#ifndef LEGSLAM_FACTORS_HPP
#define LEGSLAM_FACTORS_HPP

#include <variant>
#include <vector>

#include <Eigen/Core>

#include "legslam/geometry.hpp"

namespace legslam {

using NodeId = int;

/// Diagonal noise model. whiten(r)[i] = r[i] / sigmas[i]. Units follow
/// the twist ordering: meters for indices 0-2, radians for 3-5.
class DiagonalNoise {
 public:
  /// Throws std::invalid_argument unless every sigma is positive and
  /// finite.
  explicit DiagonalNoise(const Eigen::VectorXd& sigmas);

  static DiagonalNoise Isotropic(int dim, double sigma);

  const Eigen::VectorXd& sigmas() const { return sigmas_; }
  int dim() const { return static_cast<int>(sigmas_.size()); }

  Eigen::VectorXd Whiten(const Eigen::VectorXd& residual) const {
    return residual.cwiseQuotient(sigmas_);
  }

 private:
  Eigen::VectorXd sigmas_;
};

/// Full-pose unary factor; also the gauge anchor on the first node.
struct PriorFactor {
  NodeId node;
  Pose3 measured;
  DiagonalNoise noise;  // dim 6
};

/// Relative-pose binary factor a -> b. With an identity measurement
/// this is the cross-lane coupling factor.
struct BetweenFactor {
  NodeId node_a;
  NodeId node_b;
  Pose3 measured;
  DiagonalNoise noise;  // dim 6
};

/// Scalar unary factor on the translation z component.
struct ElevationPriorFactor {
  NodeId node;
  double measured_z;
  DiagonalNoise noise;  // dim 1
};

using Factor = std::variant<PriorFactor, BetweenFactor, ElevationPriorFactor>;

/// Sigmas of the DoF-selective coupling noise model: tight on z
/// (index 2), loose everywhere else. Construction enforces that
/// sigma_z is strictly the smallest entry.
class CouplingSigmas {
 public:
  explicit CouplingSigmas(const Twist& sigmas);

  /// z = 0.02 m; x, y = 10 m; rotations = 10 rad.
  static CouplingSigmas Default();

  const Twist& sigmas() const { return sigmas_; }

 private:
  Twist sigmas_;
};

/// Identity between factor x -> y with the coupling noise model.
/// Throws std::invalid_argument if the ids coincide.
BetweenFactor MakeCouplingFactor(NodeId x_id, NodeId y_id,
                                 const CouplingSigmas& sigmas);

/// Unwhitened residuals. Convention: log(measured^-1 * predicted)
/// with right-perturbation charts.
Twist ResidualPrior(const PriorFactor& f, const Pose3& x);
Twist ResidualBetween(const BetweenFactor& f, const Pose3& x_a,
                      const Pose3& x_b);
double ResidualElevation(const ElevationPriorFactor& f, const Pose3& x);

/// Node ids a factor touches, in evaluation order.
std::vector<NodeId> FactorNodes(const Factor& factor);

int ResidualDim(const Factor& factor);

/// Whitened residual of any factor given the poses at its nodes
/// (ordered as FactorNodes).
Eigen::VectorXd WhitenedResidual(const Factor& factor,
                                 const std::vector<Pose3>& poses);

/// Jacobians of the whitened residual with respect to a right
/// perturbation of each node, by central finite differences with step
/// 1e-6. One matrix per node, ordered as FactorNodes.
std::vector<Eigen::MatrixXd> Jacobians(const Factor& factor,
                                       const std::vector<Pose3>& poses);

}  // namespace legslam

#endif  // LEGSLAM_FACTORS_HPP
