#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "smhk/spectral.hpp"
#include "smhk/topology.hpp"

namespace smhk {

struct SimConfig {
  std::size_t trials = 1000;
  std::size_t iterations = 200;
  std::uint64_t seed = 1;
};

// Aggregate of the normalized distance to consensus
//   e(t) = |x(t) - mean * 1| / |x(0) - mean * 1|
// over the trials. Trial r draws x(0) uniformly from [0, 1]^N with
// std::mt19937_64(seed + r).
struct TrajectoryStats {
  std::vector<double> geo_mean_distance;  // t = 0 .. iterations
  std::vector<double> final_distance;     // one per trial
  std::size_t excluded_trials = 0;        // constant initial vectors
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string distribution = "uniform[0,1]";
  std::string aggregate = "geometric_mean";
};

using StateObserver = std::function<void(std::size_t, std::span<const double>)>;

// Iterates x(t+1) = W x(t), calling observe(t, x(t)) for t = 0..iterations.
void run_consensus(const WeightMatrix& w, std::vector<double> x0,
                   std::size_t iterations, const StateObserver& observe);

// e(t) for t = 0..iterations. All zeros when x0 is constant (its spread is
// below 1e-14).
std::vector<double> distance_trajectory(const WeightMatrix& w,
                                        std::span<const double> x0,
                                        std::size_t iterations);

TrajectoryStats simulate(const WeightMatrix& w, const SimConfig& config);
TrajectoryStats simulate(const SmhkParams& params, const OrbitWeights& weights,
                         const SimConfig& config);

// Inclusive iteration range [first, last].
struct DecayWindow {
  std::size_t first = 0;
  std::size_t last = 0;
};

// Second half of the recorded iterations.
DecayWindow default_window(std::size_t iterations);

// Per-step rate exp(slope) of the least-squares fit of log e(t) against t.
// Error(kUndefinedRate) when the window holds a zero distance, fewer than
// two points or lies outside the data.
double decay_rate(std::span<const double> distances, DecayWindow window);
double decay_rate(const TrajectoryStats& stats, DecayWindow window);
double decay_rate(const TrajectoryStats& stats);

}  // namespace smhk
