#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "weakkam/weakkam.hpp"

using namespace weakkam;

namespace {

ActionKernel preset_kernel(std::size_t n) {
  const PeriodicGrid grid(n);
  return build_action_kernel(grid, HamiltonianSpec::example1_preset(grid), grid.dx());
}

void BM_BuildKernel(benchmark::State& state) {
  const PeriodicGrid grid(static_cast<std::size_t>(state.range(0)));
  const HamiltonianSpec spec = HamiltonianSpec::example1_preset(grid);
  for (auto _ : state) benchmark::DoNotOptimize(build_action_kernel(grid, spec, grid.dx()));
}
BENCHMARK(BM_BuildKernel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Karp(benchmark::State& state) {
  const SparseKernel k(preset_kernel(static_cast<std::size_t>(state.range(0))).cost());
  for (auto _ : state) benchmark::DoNotOptimize(karp_min_mean_cycle(k));
}
BENCHMARK(BM_Karp)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_AllPairs(benchmark::State& state) {
  const ActionKernel kernel = preset_kernel(static_cast<std::size_t>(state.range(0)));
  const MinPlusMatrix reduced = reduce_kernel(kernel, critical_value(kernel));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_shortest(reduced));
}
BENCHMARK(BM_AllPairs)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_MaxSolution(benchmark::State& state) {
  const ActionKernel kernel = preset_kernel(256);
  const WeakKamAtlas atlas = build_atlas(kernel);
  std::vector<double> a(256);
  for (Node x = 0; x < 256; ++x) a[x] = std::cos(2 * std::numbers::pi * atlas.grid.position(x));
  const DiscountProblem p{std::pow(10.0, -static_cast<double>(state.range(0))), a, 1.0,
                          std::make_shared<SparseKernel>(atlas.reduced), atlas.c0, atlas.dt};
  const std::vector<double> v0 = elementary_solution(atlas, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_max_solution(p, v0));
}
BENCHMARK(BM_MaxSolution)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
