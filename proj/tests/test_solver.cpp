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

#include <algorithm>
#include <random>

#include <doctest.h>

#include "legslam/solver.hpp"

namespace legslam {
namespace {

Twist MakeTwist(double a, double b, double c, double d, double e, double f) {
  Twist xi;
  xi << a, b, c, d, e, f;
  return xi;
}

Pose3 RandomPose(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Twist xi = MakeTwist(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
  xi.tail<3>() *= 0.5;
  xi.head<3>() *= 3.0;
  return Exp(xi);
}

DiagonalNoise Unit6() { return DiagonalNoise::Isotropic(6, 1.0); }

TEST_CASE("values lookups and duplicate protection") {
  Values values;
  values.Insert(0, Pose3::Identity());
  CHECK(values.Contains(0));
  CHECK_THROWS_AS(values.Insert(0, Pose3::Identity()), std::invalid_argument);
  CHECK_THROWS_WITH_AS(values.At(7), doctest::Contains("7"),
                       std::out_of_range);
}

TEST_CASE("total cost of simple graphs") {
  Graph graph;
  Values values;
  CHECK(TotalCost(graph, values) == 0.0);  // empty graph

  std::mt19937_64 rng(1);
  const Pose3 p = RandomPose(rng);
  graph.Add(PriorFactor{0, p, Unit6()});
  values.Insert(0, p);
  CHECK(TotalCost(graph, values) <= 1e-20);

  Graph coupling_graph;
  coupling_graph.Add(MakeCouplingFactor(0, 1, CouplingSigmas::Default()));
  Values xy;
  xy.Insert(0, Pose3::Identity());
  xy.Insert(1, Pose3::FromTranslation(0, 0, 0.1));
  // (0.1 / 0.02)^2
  CHECK(TotalCost(coupling_graph, xy) == doctest::Approx(25.0).epsilon(1e-10));
}

TEST_CASE("total cost names the missing node") {
  Graph graph;
  graph.Add(PriorFactor{3, Pose3::Identity(), Unit6()});
  Values values;
  CHECK_THROWS_WITH_AS(TotalCost(graph, values), doctest::Contains("3"),
                       std::out_of_range);
}

TEST_CASE("linearize: zero residual gives zero gradient") {
  Graph graph;
  const Pose3 p = Pose3::FromTranslation(1, 2, 3);
  graph.Add(PriorFactor{0, p, Unit6()});
  Values values;
  values.Insert(0, p);
  const LinearSystem system = Linearize(graph, values);
  CHECK(system.gradient.lpNorm<Eigen::Infinity>() <= 1e-10);
}

TEST_CASE("linearize matches a dense assembly oracle") {
  std::mt19937_64 rng(2);
  Graph graph;
  Values values;
  const int n = 4;
  for (int k = 0; k < n; ++k) {
    values.Insert(k, RandomPose(rng));
  }
  graph.Add(PriorFactor{0, RandomPose(rng), Unit6()});
  for (int k = 1; k < n; ++k) {
    graph.Add(BetweenFactor{k - 1, k, RandomPose(rng),
                            DiagonalNoise::Isotropic(6, 0.3)});
  }
  graph.Add(MakeCouplingFactor(0, 3, CouplingSigmas::Default()));

  // Oracle: stack whitened jacobians into one dense J and form J^T J.
  int rows = 0;
  for (const Factor& f : graph.factors()) rows += ResidualDim(f);
  Eigen::MatrixXd dense_j = Eigen::MatrixXd::Zero(rows, 6 * n);
  Eigen::VectorXd stacked_r(rows);
  int row = 0;
  for (const Factor& f : graph.factors()) {
    std::vector<Pose3> poses;
    for (NodeId id : FactorNodes(f)) poses.push_back(values.At(id));
    const auto jacobians = Jacobians(f, poses);
    const auto nodes = FactorNodes(f);
    const int dim = ResidualDim(f);
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      dense_j.block(row, 6 * nodes[a], dim, 6) = jacobians[a];
    }
    stacked_r.segment(row, dim) = WhitenedResidual(f, poses);
    row += dim;
  }

  const LinearSystem system = Linearize(graph, values);
  const Eigen::MatrixXd dense_h = Eigen::MatrixXd(system.hessian);
  CHECK((dense_h - dense_j.transpose() * dense_j).cwiseAbs().maxCoeff() <=
        1e-10);
  CHECK((system.gradient - dense_j.transpose() * stacked_r)
            .cwiseAbs()
            .maxCoeff() <= 1e-10);
}

TEST_CASE("linearize: chain sparsity is block tridiagonal plus coupling") {
  std::mt19937_64 rng(3);
  Graph graph;
  Values values;
  for (int k = 0; k < 5; ++k) values.Insert(k, RandomPose(rng));
  graph.Add(PriorFactor{0, Pose3::Identity(), Unit6()});
  for (int k = 1; k < 5; ++k) {
    graph.Add(BetweenFactor{k - 1, k, Pose3::Identity(), Unit6()});
  }
  graph.Add(MakeCouplingFactor(0, 4, CouplingSigmas::Default()));

  const Eigen::MatrixXd h = Eigen::MatrixXd(Linearize(graph, values).hessian);
  auto block_nonzero = [&](int a, int b) {
    return h.block(6 * a, 6 * b, 6, 6).cwiseAbs().maxCoeff() > 1e-12;
  };
  CHECK(block_nonzero(0, 1));
  CHECK(block_nonzero(0, 4));  // coupling off-block
  CHECK_FALSE(block_nonzero(0, 2));
  CHECK_FALSE(block_nonzero(1, 3));
  CHECK_FALSE(block_nonzero(1, 4));
}

TEST_CASE("optimize converges on a single prior from far away") {
  std::mt19937_64 rng(4);
  const Pose3 target = RandomPose(rng);
  Graph graph;
  graph.Add(PriorFactor{0, target, Unit6()});
  Values init;
  init.Insert(0, Pose3::FromTranslation(20, -5, 13));

  const auto [values, stats] = Optimize(graph, init);
  CHECK(stats.converged);
  CHECK(stats.final_cost < 1e-18);
  CHECK(PoseDistance(values.At(0), target) <= 1e-9);
  CHECK(stats.final_cost <= stats.initial_cost);
}

TEST_CASE("optimize recovers a noiseless chain exactly") {
  std::mt19937_64 rng(5);
  const int n = 10;
  std::vector<Pose3> truth = {RandomPose(rng)};
  std::vector<Pose3> measurements;
  for (int k = 1; k < n; ++k) {
    measurements.push_back(RandomPose(rng));
    truth.push_back(Compose(truth.back(), measurements.back()));
  }

  Graph graph;
  graph.Add(PriorFactor{0, truth[0], DiagonalNoise::Isotropic(6, 0.01)});
  for (int k = 1; k < n; ++k) {
    graph.Add(BetweenFactor{k - 1, k, measurements[k - 1],
                            DiagonalNoise::Isotropic(6, 0.1)});
  }
  Values init;
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  for (int k = 0; k < n; ++k) {
    const Twist jitter =
        MakeTwist(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
    init.Insert(k, Retract(truth[k], jitter));
  }

  const auto [values, stats] = Optimize(graph, init);
  CHECK(stats.converged);
  // Oracle: cumulative composition of the exact measurements.
  for (int k = 0; k < n; ++k) {
    CHECK(PoseDistance(values.At(k), truth[k]) <= 1e-8);
  }
}

TEST_CASE("optimize solves scalar weighted least squares on z") {
  Graph graph;
  graph.Add(ElevationPriorFactor{0, 0.0, DiagonalNoise::Isotropic(1, 1.0)});
  graph.Add(ElevationPriorFactor{0, 1.0, DiagonalNoise::Isotropic(1, 0.5)});
  // Anchor the unobserved dofs so the problem is full rank.
  Twist anchor_sigmas = Twist::Constant(1e-3);
  anchor_sigmas(2) = 1e6;  // leave z effectively free
  graph.Add(PriorFactor{0, Pose3::Identity(), DiagonalNoise(anchor_sigmas)});

  Values init;
  init.Insert(0, Pose3::Identity());
  const auto [values, stats] = Optimize(graph, init);
  CHECK(stats.converged);
  // Weights 1 and 4: optimum z = 4/5.
  CHECK(values.At(0).translation().z() == doctest::Approx(0.8).epsilon(1e-8));
}

TEST_CASE("optimize is invariant to factor ordering") {
  // Measurements inconsistent by small perturbations of a ground-truth
  // chain; initialization near the truth. Wildly inconsistent graphs
  // have argmins only defined up to the numeric-Jacobian noise floor.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto small_twist = [&] {
    Twist xi;
    xi << u(rng), u(rng), u(rng), u(rng), u(rng), u(rng);
    return Twist(0.05 * xi);
  };

  std::vector<Pose3> truth;
  for (int k = 0; k < 6; ++k) truth.push_back(RandomPose(rng));
  // Nodes 1 and 4 carry a coupling factor, so keep them consistent
  // with its identity measurement.
  truth[4] = Retract(truth[1], small_twist());

  std::vector<Factor> factors;
  factors.push_back(PriorFactor{0, truth[0], Unit6()});
  for (int k = 1; k < 6; ++k) {
    factors.push_back(
        BetweenFactor{k - 1, k,
                      Compose(Between(truth[k - 1], truth[k]),
                              Exp(small_twist())),
                      DiagonalNoise::Isotropic(6, 0.2)});
  }
  factors.push_back(MakeCouplingFactor(1, 4, CouplingSigmas::Default()));

  Values init;
  for (int k = 0; k < 6; ++k) {
    init.Insert(k, Retract(truth[k], small_twist()));
  }

  Graph forward;
  for (const auto& f : factors) forward.Add(f);
  Graph reversed;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    reversed.Add(*it);
  }

  // Solve to the numerical floor so both orderings reach the same
  // argmin, not merely the same cost plateau.
  SolverSettings tight;
  tight.relative_cost_tolerance = 1e-15;
  const auto [v1, s1] = Optimize(forward, init, tight);
  const auto [v2, s2] = Optimize(reversed, init, tight);
  CHECK(s1.converged);
  CHECK(s2.converged);
  for (int k = 0; k < 6; ++k) {
    CHECK(PoseDistance(v1.At(k), v2.At(k)) <= 1e-8);
  }
}

TEST_CASE("uniform sigma scaling leaves the argmin unchanged") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto small_twist = [&] {
    Twist xi;
    xi << u(rng), u(rng), u(rng), u(rng), u(rng), u(rng);
    return Twist(0.05 * xi);
  };

  std::vector<Pose3> truth;
  for (int k = 0; k < 4; ++k) truth.push_back(RandomPose(rng));

  std::vector<Pose3> measured;
  for (int k = 1; k < 4; ++k) {
    measured.push_back(
        Compose(Between(truth[k - 1], truth[k]), Exp(small_twist())));
  }

  Values init;
  for (int k = 0; k < 4; ++k) init.Insert(k, Retract(truth[k], small_twist()));

  auto build = [&](double scale) {
    Graph graph;
    graph.Add(
        PriorFactor{0, truth[0], DiagonalNoise::Isotropic(6, 0.1 * scale)});
    for (int k = 1; k < 4; ++k) {
      graph.Add(BetweenFactor{k - 1, k, measured[k - 1],
                              DiagonalNoise::Isotropic(6, 0.3 * scale)});
    }
    graph.Add(ElevationPriorFactor{
        2, truth[2].translation().z() + 0.2,
        DiagonalNoise::Isotropic(1, 0.05 * scale)});
    return graph;
  };

  SolverSettings tight;
  tight.relative_cost_tolerance = 1e-15;
  const auto [v1, s1] = Optimize(build(1.0), init, tight);
  const auto [v2, s2] = Optimize(build(7.5), init, tight);
  CHECK(s1.converged);
  CHECK(s2.converged);
  for (int k = 0; k < 4; ++k) {
    CHECK(PoseDistance(v1.At(k), v2.At(k)) <= 1e-8);
  }
}

TEST_CASE("noiseless measurements make the truth a global minimum") {
  std::mt19937_64 rng(8);
  std::vector<Pose3> truth;
  for (int k = 0; k < 6; ++k) truth.push_back(RandomPose(rng));

  Graph graph;
  graph.Add(PriorFactor{0, truth[0], Unit6()});
  for (int k = 1; k < 6; ++k) {
    graph.Add(BetweenFactor{k - 1, k, Between(truth[k - 1], truth[k]),
                            DiagonalNoise::Isotropic(6, 0.1)});
  }
  Values exact;
  for (int k = 0; k < 6; ++k) exact.Insert(k, truth[k]);
  CHECK(TotalCost(graph, exact) <= 1e-18);

  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    Values init;
    for (int k = 0; k < 6; ++k) {
      Twist jitter = MakeTwist(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
      jitter *= 0.1 / jitter.norm();
      init.Insert(k, Retract(truth[k], jitter));
    }
    const auto [values, stats] = Optimize(graph, init);
    CHECK(stats.converged);
    CHECK(stats.final_cost <= 1e-10);
  }
}

TEST_CASE("incremental update with nothing new returns prev unchanged") {
  std::mt19937_64 rng(9);
  const Pose3 target = RandomPose(rng);
  Graph graph;
  graph.Add(PriorFactor{0, target, Unit6()});
  Values values;
  values.Insert(0, Pose3::FromTranslation(1, 1, 1));
  auto [solved, stats] = Optimize(graph, values);
  values = solved;

  const Pose3 before = values.At(0);
  const auto [after, stats2] = IncrementalUpdate(graph, {}, {}, values);
  CHECK(stats2.converged);
  CHECK(after.At(0).translation() == before.translation());
  CHECK(after.At(0).rotation().coeffs() == before.rotation().coeffs());
}

TEST_CASE("incremental update rejects duplicate node ids") {
  Graph graph;
  graph.Add(PriorFactor{0, Pose3::Identity(), Unit6()});
  Values values;
  values.Insert(0, Pose3::Identity());
  CHECK_THROWS_AS(
      IncrementalUpdate(graph, {}, {{0, Pose3::Identity()}}, values),
      std::invalid_argument);
}

TEST_CASE("appending a noiseless between pins the new node") {
  std::mt19937_64 rng(10);
  const Pose3 start = RandomPose(rng);
  Graph graph;
  graph.Add(PriorFactor{0, start, Unit6()});
  Values values;
  values.Insert(0, start);
  auto [v0, s0] = Optimize(graph, values);
  values = v0;

  const Pose3 measurement = RandomPose(rng);
  const auto [after, stats] = IncrementalUpdate(
      graph, {BetweenFactor{0, 1, measurement, Unit6()}},
      {{1, Compose(start, measurement)}}, values);
  CHECK(stats.converged);
  CHECK(PoseDistance(after.At(1), Compose(after.At(0), measurement)) <= 1e-9);
}

TEST_CASE("warm-started incremental equals cold-start on a chain") {
  std::mt19937_64 rng(11);
  const int n = 12;
  std::vector<Pose3> odom = {Pose3::Identity()};
  std::uniform_real_distribution<double> u(-0.02, 0.02);
  for (int k = 1; k < n; ++k) {
    const Twist step = MakeTwist(1 + u(rng), u(rng), u(rng), u(rng), u(rng),
                                 0.1 + u(rng));
    odom.push_back(Compose(odom.back(), Exp(step)));
  }
  const DiagonalNoise noise = DiagonalNoise::Isotropic(6, 0.05);

  // Incremental: one node at a time.
  Graph inc_graph;
  inc_graph.Add(PriorFactor{0, odom[0], Unit6()});
  Values inc_values;
  inc_values.Insert(0, odom[0]);
  for (int k = 1; k < n; ++k) {
    IncrementalUpdate(inc_graph,
                      {BetweenFactor{k - 1, k, Between(odom[k - 1], odom[k]),
                                     noise}},
                      {{k, odom[k]}}, inc_values);
  }

  // Cold start on the full graph.
  Graph full;
  full.Add(PriorFactor{0, odom[0], Unit6()});
  Values init;
  init.Insert(0, odom[0]);
  for (int k = 1; k < n; ++k) {
    full.Add(BetweenFactor{k - 1, k, Between(odom[k - 1], odom[k]), noise});
    init.Insert(k, odom[k]);
  }
  const auto [cold, stats] = Optimize(full, init);

  for (int k = 0; k < n; ++k) {
    CHECK((inc_values.At(k).translation() - cold.At(k).translation()).norm() <=
          1e-8);
  }
}

}  // namespace
}  // namespace legslam
