#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "smhk/spectral.hpp"
#include "smhk/topology.hpp"

namespace smhk {

// Per-coordinate bounds; evaluated points are clamped into the box.
struct SearchBox {
  std::vector<double> lower;
  std::vector<double> upper;
};

// w0 in [0, 2/(k(n-1))], every path weight in [0, 1].
SearchBox default_search_box(const SmhkParams& params);

struct OracleConfig {
  int restarts = 16;
  int max_iters = 2000;
  double simplex_tol = 1e-9;
  std::optional<SearchBox> search_box;  // default_search_box() when empty
  std::uint64_t seed = 20100413;
  // When false restart 0 is a random start too, which keeps the search
  // independent of the closed form.
  bool start_at_closed_form = true;
};

struct OracleResult {
  OrbitWeights weights;
  double slem = 0.0;
  std::size_t evaluations = 0;
  std::vector<double> restart_best;  // best objective per restart
  std::size_t best_restart = 0;
};

// SLEM of the weight matrix, computed from the stratified blocks.
double objective(const SmhkParams& params, const OrbitWeights& weights);

// Multi-start simplex search over the orbit weights. Restart 0 starts at
// the closed-form solution (box midpoint if the solver fails), restart 1 at
// the box midpoint, the rest at uniform random points drawn with seed + r.
// Ties are broken by the lowest restart index.
OracleResult optimize_weights(const SmhkParams& params,
                              const OracleConfig& config = {});

}  // namespace smhk
