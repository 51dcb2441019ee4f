#include <random>

#include <benchmark/benchmark.h>

#include "smhk/smhk.hpp"

namespace {

smhk::Matrix random_symmetric(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  smhk::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = unit(rng);
  }
  return a;
}

void BM_JacobiEigenvalues(benchmark::State& state) {
  const smhk::Matrix a = random_symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smhk::eigenvalues_symmetric(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiEigenvalues)->RangeMultiplier(2)->Range(4, 128)->Complexity();

void BM_SolveTheta(benchmark::State& state) {
  const auto p = smhk::validate_params(3, 2, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(smhk::solve_theta(p));
}
BENCHMARK(BM_SolveTheta)->Arg(1)->Arg(3)->Arg(5);

void BM_ObjectiveBlocks(benchmark::State& state) {
  const auto p = smhk::validate_params(3, 2, state.range(0), 3);
  const auto w = smhk::analytical_weights(p).weights;
  for (auto _ : state) benchmark::DoNotOptimize(smhk::objective(p, w));
}
BENCHMARK(BM_ObjectiveBlocks)->Arg(2)->Arg(5)->Arg(10);

void BM_SlemFull(benchmark::State& state) {
  const auto p = smhk::validate_params(3, 2, 2, state.range(0));
  const auto w = smhk::assemble_full(p, smhk::analytical_weights(p).weights);
  for (auto _ : state) benchmark::DoNotOptimize(smhk::slem_full(w));
}
BENCHMARK(BM_SlemFull)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const auto p = smhk::validate_params(3, 2, 2, state.range(0));
  const auto w = smhk::analytical_weights(p).weights;
  smhk::SimConfig config;
  config.trials = 100;
  for (auto _ : state) benchmark::DoNotOptimize(smhk::simulate(p, w, config));
}
BENCHMARK(BM_Simulate)->Arg(3)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto p = smhk::validate_params(3, 2, 2, 2);
  smhk::OracleConfig config;
  config.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smhk::optimize_weights(p, config));
}
BENCHMARK(BM_Oracle)->Arg(1)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
