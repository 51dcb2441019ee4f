#include "smhk/oracle.hpp"

#include <algorithm>
#include <random>
#include <span>

#include "smhk/error.hpp"
#include "smhk/nelder_mead.hpp"
#include "smhk/parallel.hpp"
#include "smhk/weights.hpp"

namespace smhk {

namespace {

constexpr double kStepFraction = 0.05;

void validate(const SmhkParams& params, const OracleConfig& config,
              const SearchBox& box) {
  if (config.restarts < 1) {
    throw Error(ErrorKind::kInvalidArgument, "oracle needs at least one restart");
  }
  if (config.max_iters < 1 || !(config.simplex_tol > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "oracle needs max_iters >= 1 and simplex_tol > 0");
  }
  const std::size_t dim = params.orbit_count();
  if (box.lower.size() != dim || box.upper.size() != dim) {
    throw Error(ErrorKind::kInvalidArgument, "search box has the wrong dimension");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(box.lower[i] < box.upper[i])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "search box lower bound must be below the upper bound");
    }
  }
}

std::vector<double> clamp_to(const SearchBox& box, std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(out[i], box.lower[i], box.upper[i]);
  }
  return out;
}

std::vector<double> start_point(const SmhkParams& params, const SearchBox& box,
                                const OracleConfig& config, int restart) {
  const std::size_t dim = box.lower.size();
  std::vector<double> midpoint(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    midpoint[i] = 0.5 * (box.lower[i] + box.upper[i]);
  }

  if (restart == 0 && config.start_at_closed_form) {
    try {
      return clamp_to(box, analytical_weights(params).weights.values());
    } catch (const Error&) {
      return midpoint;
    }
  }
  if (restart == 1) return midpoint;

  std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(restart));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    x[i] = box.lower[i] + unit(rng) * (box.upper[i] - box.lower[i]);
  }
  return x;
}

}  // namespace

SearchBox default_search_box(const SmhkParams& params) {
  SearchBox box;
  box.lower.assign(params.orbit_count(), 0.0);
  box.upper.assign(params.orbit_count(), 1.0);
  box.upper[0] = 2.0 / (params.stars_per_set() * (params.sets() - 1.0));
  return box;
}

double objective(const SmhkParams& params, const OrbitWeights& weights) {
  return slem_blocks(stratify(params, weights));
}

OracleResult optimize_weights(const SmhkParams& params,
                              const OracleConfig& config) {
  const SearchBox box = config.search_box.value_or(default_search_box(params));
  validate(params, config, box);

  const std::size_t dim = params.orbit_count();
  std::vector<double> steps(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    steps[i] = kStepFraction * (box.upper[i] - box.lower[i]);
  }

  NelderMeadOptions options;
  options.max_iters = config.max_iters;
  options.simplex_tol = config.simplex_tol;

  const Objective f = [&](std::span<const double> x) {
    return objective(params, OrbitWeights(clamp_to(box, x)));
  };

  const auto restarts = static_cast<std::size_t>(config.restarts);
  std::vector<NelderMeadResult> runs(restarts);
  parallel_for(restarts, [&](std::size_t r) {
    std::vector<double> start = start_point(params, box, config, static_cast<int>(r));
    // Keep the first simplex inside the box.
    std::vector<double> local_steps = steps;
    for (std::size_t i = 0; i < dim; ++i) {
      if (start[i] + local_steps[i] > box.upper[i]) local_steps[i] = -local_steps[i];
    }
    runs[r] = nelder_mead(f, std::move(start), local_steps, options);
  });

  OracleResult result;
  result.restart_best.reserve(restarts);
  for (std::size_t r = 0; r < restarts; ++r) {
    result.restart_best.push_back(runs[r].value);
    result.evaluations += static_cast<std::size_t>(runs[r].evaluations);
    if (runs[r].value < runs[result.best_restart].value) result.best_restart = r;
  }

  result.weights = OrbitWeights(clamp_to(box, runs[result.best_restart].x));
  result.slem = objective(params, result.weights);
  return result;
}

}  // namespace smhk
