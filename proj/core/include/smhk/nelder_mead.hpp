#pragma once

#include <functional>
#include <span>
#include <vector>

namespace smhk {

struct NelderMeadOptions {
  int max_iters = 2000;
  // Stop once every vertex is within this max-norm distance of the best.
  double simplex_tol = 1e-9;
  double reflect = 1.0;
  double expand = 2.0;
  double contract = 0.5;
  double shrink = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Derivative-free simplex search. The initial simplex is `start` plus one
// vertex per coordinate offset by steps[i].
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             std::span<const double> steps,
                             const NelderMeadOptions& options = {});

}  // namespace smhk
