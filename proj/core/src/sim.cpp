#include "smhk/sim.hpp"

#include <cmath>
#include <random>

#include "smhk/error.hpp"
#include "smhk/parallel.hpp"

namespace smhk {

namespace {

constexpr double kConstantSpread = 1e-14;

double spread(std::span<const double> x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double sum = 0.0;
  for (double v : x) sum += (v - mean) * (v - mean);
  return std::sqrt(sum);
}

}  // namespace

void run_consensus(const WeightMatrix& w, std::vector<double> x0,
                   std::size_t iterations, const StateObserver& observe) {
  if (x0.size() != w.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "initial vector does not match the weight matrix");
  }
  std::vector<double> next(x0.size());
  observe(0, x0);
  for (std::size_t t = 1; t <= iterations; ++t) {
    multiply(w.matrix(), x0, next);
    x0.swap(next);
    observe(t, x0);
  }
}

std::vector<double> distance_trajectory(const WeightMatrix& w,
                                        std::span<const double> x0,
                                        std::size_t iterations) {
  std::vector<double> distances(iterations + 1, 0.0);
  const double initial = spread(x0);
  if (initial < kConstantSpread) return distances;
  run_consensus(w, {x0.begin(), x0.end()}, iterations,
                [&](std::size_t t, std::span<const double> x) {
                  distances[t] = t == 0 ? 1.0 : spread(x) / initial;
                });
  return distances;
}

TrajectoryStats simulate(const WeightMatrix& w, const SimConfig& config) {
  if (config.trials < 1 || config.iterations < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "simulation needs at least one trial and one iteration");
  }
  const std::size_t size = w.size();
  const std::size_t steps = config.iterations + 1;

  std::vector<std::vector<double>> per_trial(config.trials);
  parallel_for(config.trials, [&](std::size_t r) {
    std::mt19937_64 rng(config.seed + r);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x0(size);
    for (double& v : x0) v = unit(rng);
    per_trial[r] = distance_trajectory(w, x0, config.iterations);
  });

  TrajectoryStats stats;
  stats.seed = config.seed;
  stats.trials = config.trials;
  stats.final_distance.reserve(config.trials);

  std::vector<double> log_sum(steps, 0.0);
  std::size_t included = 0;
  for (const std::vector<double>& e : per_trial) {
    stats.final_distance.push_back(e.back());
    if (e.front() == 0.0) {
      ++stats.excluded_trials;
      continue;
    }
    ++included;
    for (std::size_t t = 0; t < steps; ++t) log_sum[t] += std::log(e[t]);
  }

  stats.geo_mean_distance.assign(steps, 0.0);
  if (included > 0) {
    for (std::size_t t = 0; t < steps; ++t) {
      stats.geo_mean_distance[t] = std::exp(log_sum[t] / static_cast<double>(included));
    }
  }
  return stats;
}

TrajectoryStats simulate(const SmhkParams& params, const OrbitWeights& weights,
                         const SimConfig& config) {
  return simulate(assemble_full(params, weights), config);
}

DecayWindow default_window(std::size_t iterations) {
  return {iterations / 2, iterations};
}

double decay_rate(std::span<const double> distances, DecayWindow window) {
  if (window.last >= distances.size() || window.first >= window.last) {
    throw Error(ErrorKind::kUndefinedRate,
                "decay window must hold two or more recorded iterations");
  }
  const auto count = static_cast<double>(window.last - window.first + 1);
  double mean_t = 0.0;
  double mean_y = 0.0;
  for (std::size_t t = window.first; t <= window.last; ++t) {
    if (!(distances[t] > 0.0)) {
      throw Error(ErrorKind::kUndefinedRate, "zero distance inside the decay window");
    }
    mean_t += static_cast<double>(t);
    mean_y += std::log(distances[t]);
  }
  mean_t /= count;
  mean_y /= count;

  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t t = window.first; t <= window.last; ++t) {
    const double dt = static_cast<double>(t) - mean_t;
    sxy += dt * (std::log(distances[t]) - mean_y);
    sxx += dt * dt;
  }
  return std::exp(sxy / sxx);
}

double decay_rate(const TrajectoryStats& stats, DecayWindow window) {
  return decay_rate(stats.geo_mean_distance, window);
}

double decay_rate(const TrajectoryStats& stats) {
  return decay_rate(stats, default_window(stats.geo_mean_distance.size() - 1));
}

}  // namespace smhk
