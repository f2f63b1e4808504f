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

#include "legslam/factors.hpp"

#include <cmath>
#include <stdexcept>

namespace legslam {

namespace {
constexpr double kJacobianStep = 1e-6;
}

DiagonalNoise::DiagonalNoise(const Eigen::VectorXd& sigmas) : sigmas_(sigmas) {
  if (sigmas_.size() == 0) {
    throw std::invalid_argument("DiagonalNoise: empty sigma vector");
  }
  for (int i = 0; i < sigmas_.size(); ++i) {
    if (!(sigmas_(i) > 0.0) || !std::isfinite(sigmas_(i))) {
      throw std::invalid_argument(
          "DiagonalNoise: sigmas must be positive and finite");
    }
  }
}

DiagonalNoise DiagonalNoise::Isotropic(int dim, double sigma) {
  return DiagonalNoise(Eigen::VectorXd::Constant(dim, sigma));
}

CouplingSigmas::CouplingSigmas(const Twist& sigmas) : sigmas_(sigmas) {
  for (int i = 0; i < 6; ++i) {
    if (!(sigmas_(i) > 0.0) || !std::isfinite(sigmas_(i))) {
      throw std::invalid_argument(
          "CouplingSigmas: sigmas must be positive and finite");
    }
    if (i != 2 && !(sigmas_(2) < sigmas_(i))) {
      throw std::invalid_argument(
          "CouplingSigmas: sigma_z must be strictly the smallest entry");
    }
  }
}

CouplingSigmas CouplingSigmas::Default() {
  Twist s;
  s << 10.0, 10.0, 0.02, 10.0, 10.0, 10.0;
  return CouplingSigmas(s);
}

BetweenFactor MakeCouplingFactor(NodeId x_id, NodeId y_id,
                                 const CouplingSigmas& sigmas) {
  if (x_id == y_id) {
    throw std::invalid_argument("MakeCouplingFactor: node ids must differ");
  }
  return BetweenFactor{x_id, y_id, Pose3::Identity(),
                       DiagonalNoise(sigmas.sigmas())};
}

Twist ResidualPrior(const PriorFactor& f, const Pose3& x) {
  return Log(Compose(Inverse(f.measured), x));
}

Twist ResidualBetween(const BetweenFactor& f, const Pose3& x_a,
                      const Pose3& x_b) {
  return Log(Compose(Inverse(f.measured), Between(x_a, x_b)));
}

double ResidualElevation(const ElevationPriorFactor& f, const Pose3& x) {
  return x.translation().z() - f.measured_z;
}

std::vector<NodeId> FactorNodes(const Factor& factor) {
  return std::visit(
      [](const auto& f) -> std::vector<NodeId> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BetweenFactor>) {
          return {f.node_a, f.node_b};
        } else {
          return {f.node};
        }
      },
      factor);
}

int ResidualDim(const Factor& factor) {
  return std::holds_alternative<ElevationPriorFactor>(factor) ? 1 : 6;
}

Eigen::VectorXd WhitenedResidual(const Factor& factor,
                                 const std::vector<Pose3>& poses) {
  return std::visit(
      [&poses](const auto& f) -> Eigen::VectorXd {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, PriorFactor>) {
          return f.noise.Whiten(ResidualPrior(f, poses.at(0)));
        } else if constexpr (std::is_same_v<T, BetweenFactor>) {
          return f.noise.Whiten(ResidualBetween(f, poses.at(0), poses.at(1)));
        } else {
          Eigen::VectorXd r(1);
          r(0) = ResidualElevation(f, poses.at(0));
          return f.noise.Whiten(r);
        }
      },
      factor);
}

std::vector<Eigen::MatrixXd> Jacobians(const Factor& factor,
                                       const std::vector<Pose3>& poses) {
  const int dim = ResidualDim(factor);
  const auto nodes = FactorNodes(factor);
  std::vector<Eigen::MatrixXd> jacobians;
  jacobians.reserve(nodes.size());

  for (std::size_t n = 0; n < nodes.size(); ++n) {
    Eigen::MatrixXd j(dim, 6);
    for (int k = 0; k < 6; ++k) {
      Twist delta = Twist::Zero();
      delta(k) = kJacobianStep;

      std::vector<Pose3> plus = poses;
      plus[n] = Retract(poses[n], delta);
      std::vector<Pose3> minus = poses;
      minus[n] = Retract(poses[n], -delta);

      j.col(k) = (WhitenedResidual(factor, plus) -
                  WhitenedResidual(factor, minus)) /
                 (2.0 * kJacobianStep);
    }
    jacobians.push_back(std::move(j));
  }
  return jacobians;
}

}  // namespace legslam
