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

#ifndef LEGSLAM_SOLVER_HPP
#define LEGSLAM_SOLVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "legslam/factors.hpp"

namespace legslam {

/// Node-id -> Pose3 assignment. Ids are dense non-negative integers.
class Values {
 public:
  Values() = default;

  /// Throws std::invalid_argument on duplicate or negative id.
  void Insert(NodeId id, const Pose3& pose);
  void Update(NodeId id, const Pose3& pose);

  /// Throws std::out_of_range naming the id when absent.
  const Pose3& At(NodeId id) const;

  bool Contains(NodeId id) const;
  int Size() const;

  /// One past the largest id ever inserted.
  int Capacity() const { return static_cast<int>(poses_.size()); }

 private:
  std::vector<std::optional<Pose3>> poses_;
};

/// Ordered factor list.
class Graph {
 public:
  void Add(Factor factor) { factors_.push_back(std::move(factor)); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

 private:
  std::vector<Factor> factors_;
};

struct SolverSettings {
  int max_iterations = 100;
  double initial_lambda = 1e-4;
  double lambda_up = 10.0;
  double lambda_down = 10.0;
  double lambda_cap = 1e12;
  double relative_cost_tolerance = 1e-10;
  double absolute_gradient_tolerance = 1e-10;
};

struct SolveStats {
  int iterations = 0;
  double initial_cost = 0.0;
  double final_cost = 0.0;
  bool converged = false;
  double wall_time_s = 0.0;
};

/// Damped normal equations H * delta = -b in the stacked 6-dof tangent
/// space, node id k occupying rows [6k, 6k+6).
struct LinearSystem {
  Eigen::SparseMatrix<double> hessian;  // J^T J
  Eigen::VectorXd gradient;             // J^T r
};

/// Sum of squared whitened residuals over all factors.
double TotalCost(const Graph& graph, const Values& values);

LinearSystem Linearize(const Graph& graph, const Values& values);

/// Levenberg-Marquardt on the SE(3) manifold with additive
/// lambda*diag(H) damping and right-retraction steps. Accepted steps
/// never increase the cost. Throws std::runtime_error if the damped
/// system stays singular up to the lambda cap.
std::pair<Values, SolveStats> Optimize(const Graph& graph,
                                       const Values& initial,
                                       const SolverSettings& settings = {});

/// Warm-started batch re-optimization standing in for incremental
/// smoothing: appends the new factors and values to copies of the
/// inputs and optimizes from the previous estimate.
std::pair<Values, SolveStats> IncrementalUpdate(
    Graph& graph, const std::vector<Factor>& new_factors,
    const std::vector<std::pair<NodeId, Pose3>>& new_values, Values& values,
    const SolverSettings& settings = {});

}  // namespace legslam

#endif  // LEGSLAM_SOLVER_HPP
