#pragma once

#include <cstddef>
#include <vector>

#include "smhk/spectral.hpp"
#include "smhk/topology.hpp"

namespace smhk {

// Closed-form optimum. slem == cos(theta); path(q) == 0.5 for q >= 2.
struct AnalyticalSolution {
  OrbitWeights weights;
  double theta = 0.0;
  double slem = 0.0;
  double residual = 0.0;
  // Which bracketed root (0 = smallest theta) passed the spectrum check.
  std::size_t root_index = 0;
  // |cos(theta) - SLEM of the assembled matrix|.
  double consistency_gap = 0.0;
};

// Bridge weight as a function of theta:
//   w1 = sin(m t) [c a - b] / [a sin((m-1) t) - (L+1) b sin(m t)]
// with c = cos t, a = sqrt(n) - sqrt(n-1), b = sqrt(n) + sqrt(n-1).
// Throws Error(kSingularEvaluation) when |denominator| < 1e-14.
double eval_w1(const SmhkParams& params, double theta);

// Ratio sqrt(L) * a0 / a_m of the slackness eigenvector coordinates:
//   F = ((1+L) + (cos t - 1) / w1) sin(m t) / (sqrt(L) sin t)
//       - sin((m-1) t) / (sqrt(L) sin t)
// Never depends on the number of stars per set.
// Throws Error(kSingularEvaluation) when w1 == 0 or sin t == 0.
double eval_F(const SmhkParams& params, double theta);

// Core weight for a given SLEM s.
double eval_w0(const SmhkParams& params, double s);

// Left-hand side of the theta equation
//   (1 - c) F + sqrt((n-1)/n) (1 - H c) (sqrt(L) sin(m t) / sin t - F)
// with H = (sqrt(n) - sqrt(n-1)) / (sqrt(n) + sqrt(n-1)).
double eval_residual(const SmhkParams& params, double theta);

// Roots of eval_residual in (0, pi), ascending. The interval
// (1e-9, pi - 1e-9) is scanned with 4096 uniform cells; cells touching a
// singular evaluation are skipped, each sign change is bisected until the
// bracket stops shrinking, and candidates whose residual exceeds 1e-12
// (poles of F) are dropped.
std::vector<double> residual_roots(const SmhkParams& params);

// Weight vector and SLEM implied by a given theta. Does not check the
// spectrum.
AnalyticalSolution solution_at(const SmhkParams& params, double theta);

// Smallest root whose implied weights reproduce SLEM = cos(theta) on the
// assembled matrix within 1e-8; later roots are tried in order.
// Error(kNoRoot) if nothing brackets, Error(kInconsistentRoot) if no root
// passes the spectrum check.
AnalyticalSolution solve_theta(const SmhkParams& params);

AnalyticalSolution analytical_weights(const SmhkParams& params);

}  // namespace smhk
