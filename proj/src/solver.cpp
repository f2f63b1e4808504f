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

#include "legslam/solver.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include <Eigen/SparseCholesky>

namespace legslam {

namespace {

constexpr double kDampingFloor = 1e-12;

std::vector<Pose3> GatherPoses(const Factor& factor, const Values& values) {
  std::vector<Pose3> poses;
  for (NodeId id : FactorNodes(factor)) {
    poses.push_back(values.At(id));
  }
  return poses;
}

Values RetractAll(const Values& values, const Eigen::VectorXd& delta) {
  Values out = values;
  for (NodeId id = 0; id < values.Capacity(); ++id) {
    if (!values.Contains(id)) continue;
    out.Update(id, Retract(values.At(id), delta.segment<6>(6 * id)));
  }
  return out;
}

}  // namespace

void Values::Insert(NodeId id, const Pose3& pose) {
  if (id < 0) {
    throw std::invalid_argument("Values::Insert: negative node id");
  }
  if (Contains(id)) {
    throw std::invalid_argument("Values::Insert: duplicate node id " +
                                std::to_string(id));
  }
  if (id >= static_cast<NodeId>(poses_.size())) {
    poses_.resize(id + 1);
  }
  poses_[id] = pose;
}

void Values::Update(NodeId id, const Pose3& pose) {
  if (!Contains(id)) {
    throw std::out_of_range("Values::Update: no value for node id " +
                            std::to_string(id));
  }
  poses_[id] = pose;
}

const Pose3& Values::At(NodeId id) const {
  if (!Contains(id)) {
    throw std::out_of_range("Values::At: no value for node id " +
                            std::to_string(id));
  }
  return *poses_[id];
}

bool Values::Contains(NodeId id) const {
  return id >= 0 && id < static_cast<NodeId>(poses_.size()) &&
         poses_[id].has_value();
}

int Values::Size() const {
  int n = 0;
  for (const auto& p : poses_) {
    if (p.has_value()) ++n;
  }
  return n;
}

double TotalCost(const Graph& graph, const Values& values) {
  double cost = 0.0;
  for (const Factor& factor : graph.factors()) {
    cost += WhitenedResidual(factor, GatherPoses(factor, values)).squaredNorm();
  }
  return cost;
}

LinearSystem Linearize(const Graph& graph, const Values& values) {
  const int dim = 6 * values.Capacity();
  LinearSystem system;
  system.gradient = Eigen::VectorXd::Zero(dim);

  std::vector<Eigen::Triplet<double>> triplets;
  for (const Factor& factor : graph.factors()) {
    const auto nodes = FactorNodes(factor);
    const auto poses = GatherPoses(factor, values);
    const auto residual = WhitenedResidual(factor, poses);
    const auto jacobians = Jacobians(factor, poses);

    for (std::size_t a = 0; a < nodes.size(); ++a) {
      system.gradient.segment<6>(6 * nodes[a]) +=
          jacobians[a].transpose() * residual;
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        const Eigen::Matrix<double, 6, 6> block =
            jacobians[a].transpose() * jacobians[b];
        for (int i = 0; i < 6; ++i) {
          for (int j = 0; j < 6; ++j) {
            triplets.emplace_back(6 * nodes[a] + i, 6 * nodes[b] + j,
                                  block(i, j));
          }
        }
      }
    }
  }

  system.hessian.resize(dim, dim);
  system.hessian.setFromTriplets(triplets.begin(), triplets.end());
  return system;
}

std::pair<Values, SolveStats> Optimize(const Graph& graph,
                                       const Values& initial,
                                       const SolverSettings& settings) {
  const auto start = std::chrono::steady_clock::now();

  Values values = initial;
  SolveStats stats;
  stats.initial_cost = TotalCost(graph, values);
  double cost = stats.initial_cost;
  double lambda = settings.initial_lambda;

  for (int iter = 0; iter < settings.max_iterations; ++iter) {
    const LinearSystem system = Linearize(graph, values);

    if (system.gradient.lpNorm<Eigen::Infinity>() <
        settings.absolute_gradient_tolerance) {
      stats.converged = true;
      break;
    }
    stats.iterations = iter + 1;

    // Damping floor keeps unconstrained tangent directions solvable.
    Eigen::VectorXd diag = system.hessian.diagonal();
    for (int i = 0; i < diag.size(); ++i) {
      diag(i) = std::max(diag(i), kDampingFloor);
    }

    bool accepted = false;
    while (!accepted) {
      Eigen::SparseMatrix<double> damped = system.hessian;
      for (int i = 0; i < diag.size(); ++i) {
        damped.coeffRef(i, i) += lambda * diag(i);
      }

      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> chol(damped);
      if (chol.info() != Eigen::Success) {
        lambda *= settings.lambda_up;
        if (lambda > settings.lambda_cap) {
          throw std::runtime_error(
              "Optimize: damped normal equations are ill-conditioned");
        }
        continue;
      }

      const Eigen::VectorXd delta = chol.solve(-system.gradient);
      if (delta.lpNorm<Eigen::Infinity>() < 1e-12) {
        // The proposed step is below numerical resolution; the current
        // estimate is the minimum as far as the linearization can tell.
        stats.converged = true;
        accepted = true;
        break;
      }
      const Values candidate = RetractAll(values, delta);
      const double new_cost = TotalCost(graph, candidate);

      if (new_cost <= cost) {
        const bool tiny_decrease =
            (cost - new_cost) <=
            settings.relative_cost_tolerance * std::max(cost, 1e-300);
        values = candidate;
        cost = new_cost;
        lambda = std::max(lambda / settings.lambda_down, 1e-12);
        accepted = true;
        if (tiny_decrease) {
          stats.converged = true;
        }
      } else {
        lambda *= settings.lambda_up;
        if (lambda > settings.lambda_cap) {
          // No acceptable step left; report non-convergence.
          accepted = true;
          stats.converged = false;
          iter = settings.max_iterations;
        }
      }
    }
    if (stats.converged || iter >= settings.max_iterations) break;
  }

  stats.final_cost = cost;
  stats.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return {std::move(values), stats};
}

std::pair<Values, SolveStats> IncrementalUpdate(
    Graph& graph, const std::vector<Factor>& new_factors,
    const std::vector<std::pair<NodeId, Pose3>>& new_values, Values& values,
    const SolverSettings& settings) {
  for (const auto& [id, pose] : new_values) {
    values.Insert(id, pose);  // throws on duplicate id
  }
  for (const Factor& factor : new_factors) {
    graph.Add(factor);
  }
  auto result = Optimize(graph, values, settings);
  values = result.first;
  return result;
}

}  // namespace legslam
