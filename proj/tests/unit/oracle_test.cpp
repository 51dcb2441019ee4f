#include "smhk/oracle.hpp"

#include <gtest/gtest.h>

#include <array>
#include <random>

#include "smhk/error.hpp"
#include "smhk/weights.hpp"

namespace smhk {
namespace {

TEST(Objective, ZeroWeightsGiveIdentity) {
  const SmhkParams p = validate_params(3, 2, 2, 3);
  EXPECT_EQ(objective(p, OrbitWeights({0.0, 0.0, 0.0})), 1.0);
}

TEST(Objective, MatchesClosedFormAtOptimum) {
  const SmhkParams p = validate_params(3, 2, 2, 3);
  const AnalyticalSolution sol = analytical_weights(p);
  EXPECT_NEAR(objective(p, sol.weights), sol.slem, 1e-10);
  EXPECT_NEAR(objective(p, sol.weights), slem_full(assemble_full(p, sol.weights)).slem, 1e-10);
}

TEST(Objective, ConvexAlongSegments) {
  std::mt19937_64 rng(31);
  for (const auto& [n, k, m, L] : std::vector<std::array<int, 4>>{{2, 2, 1, 1}, {3, 2, 2, 3}, {2, 3, 3, 2}}) {
    const SmhkParams p = validate_params(n, k, m, L);
    const SearchBox box = default_search_box(p);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto draw = [&] {
      std::vector<double> w(p.orbit_count());
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = box.lower[i] + unit(rng) * (box.upper[i] - box.lower[i]);
      }
      return w;
    };
    for (int trial = 0; trial < 200; ++trial) {
      const std::vector<double> a = draw();
      const std::vector<double> b = draw();
      std::vector<double> mid(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) mid[i] = 0.5 * (a[i] + b[i]);
      const double fa = objective(p, OrbitWeights(a));
      const double fb = objective(p, OrbitWeights(b));
      const double fm = objective(p, OrbitWeights(mid));
      EXPECT_LE(fm, 0.5 * (fa + fb) + 1e-10);
    }
  }
}

TEST(OptimizeWeights, ReferenceNetworkWithoutClosedFormStart) {
  const SmhkParams p = validate_params(3, 2, 2, 3);
  OracleConfig config;
  config.start_at_closed_form = false;
  const OracleResult r = optimize_weights(p, config);
  const AnalyticalSolution sol = analytical_weights(p);
  EXPECT_NEAR(r.slem, sol.slem, 1e-5);
  EXPECT_GE(r.slem, sol.slem - 1e-9);
  EXPECT_NEAR(r.weights.path(2), 0.5, 1e-3);
  EXPECT_NEAR(r.weights.core(), sol.weights.core(), 1e-4);
  EXPECT_NEAR(r.weights.path(1), sol.weights.path(1), 1e-4);
}

TEST(OptimizeWeights, CoreWeightScalesWithStars) {
  OracleConfig config;
  config.start_at_closed_form = false;
  const OracleResult k2 = optimize_weights(validate_params(2, 2, 2, 2), config);
  const OracleResult k3 = optimize_weights(validate_params(2, 3, 2, 2), config);
  EXPECT_NEAR(k2.slem, k3.slem, 1e-6);
  EXPECT_NEAR(2.0 * k2.weights.core(), 3.0 * k3.weights.core(), 1e-3);
}

TEST(OptimizeWeights, DeterministicAndSelfConsistent) {
  const SmhkParams p = validate_params(2, 3, 3, 2);
  OracleConfig config;
  config.restarts = 6;
  const OracleResult a = optimize_weights(p, config);
  const OracleResult b = optimize_weights(p, config);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.slem, b.slem);
  EXPECT_EQ(a.restart_best, b.restart_best);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.slem, objective(p, a.weights));
  EXPECT_EQ(a.restart_best.size(), 6u);
  EXPECT_EQ(a.slem, a.restart_best[a.best_restart]);
}

TEST(OptimizeWeights, ResultStaysInBox) {
  const SmhkParams p = validate_params(3, 3, 2, 2);
  OracleConfig config;
  config.restarts = 4;
  const OracleResult r = optimize_weights(p, config);
  const SearchBox box = default_search_box(p);
  for (std::size_t i = 0; i < r.weights.size(); ++i) {
    EXPECT_GE(r.weights[i], box.lower[i]);
    EXPECT_LE(r.weights[i], box.upper[i]);
  }
}

TEST(OptimizeWeights, RejectsBadConfig) {
  const SmhkParams p = validate_params(2, 2, 1, 1);
  OracleConfig config;
  config.restarts = 0;
  EXPECT_THROW(optimize_weights(p, config), Error);
  config.restarts = 1;
  config.search_box = SearchBox{{0.0, 0.5}, {1.0, 0.5}};
  EXPECT_THROW(optimize_weights(p, config), Error);
  config.search_box = SearchBox{{0.0}, {1.0}};
  EXPECT_THROW(optimize_weights(p, config), Error);
}

}  // namespace
}  // namespace smhk
