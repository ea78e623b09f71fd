#include <benchmark/benchmark.h>

#include "tracegames/pcp.hpp"

namespace {

using namespace tracegames;

// Unsatisfiable reduction constraint: the solver must exhaust every grid
// within the bounds.
void BM_BcpSolveUnsat(benchmark::State& state) {
  PcpInstance inst{"ab", {{"ab", "a"}, {"a", "bab"}}};
  PcpReduction red = to_coloring_constraint(inst);
  std::size_t bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto f = solve(red.constraint, bound, bound);
    benchmark::DoNotOptimize(f.has_value());
  }
}
BENCHMARK(BM_BcpSolveUnsat)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_PcpReduction(benchmark::State& state) {
  PcpInstance inst{"ab", {{"ab", "a"}, {"a", "ba"}}};
  for (auto _ : state) {
    PcpReduction red = to_coloring_constraint(inst);
    benchmark::DoNotOptimize(red.constraint.color_count());
  }
}
BENCHMARK(BM_PcpReduction);

void BM_PcpReductionSolve(benchmark::State& state) {
  PcpInstance inst{"ab", {{"ab", "a"}, {"a", "ba"}}};
  PcpReduction red = to_coloring_constraint(inst);
  for (auto _ : state) {
    auto f = solve(red.constraint, 6, 6);
    benchmark::DoNotOptimize(f.has_value());
  }
}
BENCHMARK(BM_PcpReductionSolve);

void BM_PcpBruteForce(benchmark::State& state) {
  PcpInstance inst{"ab", {{"ab", "aab"}, {"b", "a"}, {"ba", "b"}}};
  for (auto _ : state) {
    auto seq = brute_force(inst, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(seq.has_value());
  }
}
BENCHMARK(BM_PcpBruteForce)->Arg(6)->Arg(8);

}  // namespace
