#include "smhk/nelder_mead.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "smhk/error.hpp"

namespace smhk {
namespace {

TEST(NelderMead, Quadratic) {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const std::vector<double> steps{0.5, 0.5};
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, steps);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-8);
  EXPECT_NEAR(r.x[1], -2.0, 1e-8);
  EXPECT_GT(r.evaluations, r.iterations);
}

TEST(NelderMead, Rosenbrock) {
  const Objective f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions options;
  options.max_iters = 5000;
  options.simplex_tol = 1e-10;
  const std::vector<double> steps{0.1, 0.1};
  const NelderMeadResult r = nelder_mead(f, {-1.2, 1.0}, steps, options);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], 1.0, 1e-6);
}

TEST(NelderMead, NonsmoothAbsoluteValue) {
  const Objective f = [](std::span<const double> x) {
    return std::abs(x[0] - 0.3) + 2.0 * std::abs(x[1] + 0.1) + std::abs(x[2]);
  };
  const std::vector<double> steps{0.2, 0.2, 0.2};
  const NelderMeadResult r = nelder_mead(f, {1.0, 1.0, 1.0}, steps);
  EXPECT_NEAR(r.x[0], 0.3, 1e-6);
  EXPECT_NEAR(r.x[1], -0.1, 1e-6);
  EXPECT_NEAR(r.x[2], 0.0, 1e-6);
}

TEST(NelderMead, StopsAtIterationCap) {
  const Objective f = [](std::span<const double> x) { return x[0] * x[0]; };
  NelderMeadOptions options;
  options.max_iters = 3;
  const std::vector<double> steps{1.0};
  const NelderMeadResult r = nelder_mead(f, {10.0}, steps, options);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_FALSE(r.converged);
}

TEST(NelderMead, RejectsMismatchedSteps) {
  const Objective f = [](std::span<const double>) { return 0.0; };
  const std::vector<double> steps{1.0};
  EXPECT_THROW(nelder_mead(f, {0.0, 0.0}, steps), Error);
}

}  // namespace
}  // namespace smhk
