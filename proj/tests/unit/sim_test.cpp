#include "smhk/sim.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "smhk/error.hpp"
#include "smhk/weights.hpp"

namespace smhk {
namespace {

class ReferenceNetwork : public ::testing::Test {
 protected:
  const SmhkParams params = validate_params(3, 2, 2, 3);
  const AnalyticalSolution optimum = analytical_weights(params);
  const WeightMatrix w = assemble_full(params, optimum.weights);
};

TEST_F(ReferenceNetwork, ConstantVectorIsFixedPoint) {
  const std::vector<double> ones(w.size(), 1.0);
  run_consensus(w, ones, 50, [](std::size_t, std::span<const double> x) {
    for (double v : x) EXPECT_NEAR(v, 1.0, 1e-13);
  });
  const auto e = distance_trajectory(w, ones, 10);
  for (double v : e) EXPECT_EQ(v, 0.0);
}

TEST_F(ReferenceNetwork, MeanIsConserved) {
  std::vector<double> x0(w.size());
  for (std::size_t i = 0; i < x0.size(); ++i) x0[i] = std::sin(3.0 * i) + 2.0;
  double mean0 = 0.0;
  for (double v : x0) mean0 += v;
  mean0 /= static_cast<double>(x0.size());
  run_consensus(w, x0, 200, [&](std::size_t, std::span<const double> x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    EXPECT_NEAR(mean, mean0, 1e-12 * std::abs(mean0));
  });
}

TEST_F(ReferenceNetwork, EigenvectorDecaysAtSlem) {
  const SymmetricEigen eig = eig_symmetric(w.matrix());
  // Column of the SLEM-achieving eigenvalue.
  std::size_t column = 0;
  double best = 1.0;
  for (std::size_t c = 0; c < eig.values.size(); ++c) {
    const double gap = std::abs(std::abs(eig.values[c]) - optimum.slem);
    if (gap < best) {
      best = gap;
      column = c;
    }
  }
  std::vector<double> x0(w.size());
  for (std::size_t r = 0; r < x0.size(); ++r) x0[r] = eig.vectors(r, column);

  const auto e = distance_trajectory(w, x0, 200);
  EXPECT_EQ(e[0], 1.0);
  for (std::size_t t = 1; t <= 200; t += 20) {
    EXPECT_NEAR(e[t], std::pow(optimum.slem, static_cast<double>(t)),
                1e-9 * std::pow(optimum.slem, static_cast<double>(t)));
  }
  EXPECT_NEAR(decay_rate(e, default_window(200)), optimum.slem, 1e-10);
}

TEST_F(ReferenceNetwork, RandomTrialsDecayAtSlem) {
  SimConfig config;
  config.trials = 200;
  const TrajectoryStats stats = simulate(w, config);
  EXPECT_EQ(stats.geo_mean_distance.size(), 201u);
  EXPECT_EQ(stats.geo_mean_distance[0], 1.0);
  EXPECT_EQ(stats.final_distance.size(), 200u);
  EXPECT_EQ(stats.excluded_trials, 0u);
  EXPECT_NEAR(decay_rate(stats), optimum.slem, 0.02 * optimum.slem);
}

TEST_F(ReferenceNetwork, OptimalWeightsDecayFastest) {
  SimConfig config;
  config.trials = 20;
  config.iterations = 300;
  const double rate = decay_rate(simulate(w, config));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> perturbed = optimum.weights.values();
    double norm = 0.0;
    std::vector<double> dir(perturbed.size());
    for (double& d : dir) {
      d = unit(rng);
      norm += d * d;
    }
    for (std::size_t i = 0; i < dir.size(); ++i) perturbed[i] += 0.05 * dir[i] / std::sqrt(norm);
    const OrbitWeights other(perturbed);
    const double other_rate = decay_rate(simulate(params, other, config));
    // Asymptotic rate of the perturbed matrix is its own SLEM.
    const double other_slem = slem_full(assemble_full(params, other)).slem;
    EXPECT_GT(other_slem, optimum.slem);
    EXPECT_LE(rate, other_rate + 1e-3) << "perturbation " << trial;
  }
}

TEST_F(ReferenceNetwork, SameSeedSameStats) {
  SimConfig config;
  config.trials = 30;
  config.iterations = 40;
  config.seed = 77;
  const TrajectoryStats a = simulate(w, config);
  const TrajectoryStats b = simulate(w, config);
  EXPECT_EQ(a.geo_mean_distance, b.geo_mean_distance);
  EXPECT_EQ(a.final_distance, b.final_distance);
  config.seed = 78;
  EXPECT_NE(simulate(w, config).geo_mean_distance, a.geo_mean_distance);
}

TEST(DecayRate, ExactGeometricSequence) {
  std::vector<double> e(101);
  for (std::size_t t = 0; t < e.size(); ++t) e[t] = std::pow(0.8, static_cast<double>(t));
  EXPECT_NEAR(decay_rate(e, {10, 100}), 0.8, 1e-13);
}

TEST(DecayRate, UndefinedWindows) {
  std::vector<double> e{1.0, 0.5, 0.0, 0.0};
  EXPECT_THROW(decay_rate(e, {1, 3}), Error);
  EXPECT_THROW(decay_rate(e, {0, 9}), Error);
  EXPECT_THROW(decay_rate(e, {1, 1}), Error);
}

TEST(Simulate, RejectsEmptyConfig) {
  const SmhkParams p = validate_params(2, 2, 1, 1);
  const OrbitWeights weights({0.2, 0.3});
  SimConfig config;
  config.trials = 0;
  EXPECT_THROW(simulate(p, weights, config), Error);
  config.trials = 1;
  config.iterations = 0;
  EXPECT_THROW(simulate(p, weights, config), Error);
}

}  // namespace
}  // namespace smhk
