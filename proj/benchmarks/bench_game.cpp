#include <benchmark/benchmark.h>

#include "tracegames/reduction_game.hpp"

namespace {

using namespace tracegames;

std::shared_ptr<const ColoringGame> trivial_game() {
  ColoringConstraint k({"c0"});
  k.allow_initial(0);
  k.allow_final(0);
  return build_game(k);
}

void BM_EnumerateSigmaPlays(benchmark::State& state) {
  auto cg = trivial_game();
  std::size_t rounds = static_cast<std::size_t>(state.range(0));
  Coloring f;
  f.n = rounds;
  f.m = rounds;
  f.cells.assign(rounds * rounds, 0);
  auto sigma = strategy_from_coloring(cg, f);
  for (auto _ : state) {
    SigmaPlays plays = enumerate_sigma_plays(cg->game, *sigma, 100);
    benchmark::DoNotOptimize(plays.plays.size());
  }
}
BENCHMARK(BM_EnumerateSigmaPlays)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyWinning(benchmark::State& state) {
  auto cg = trivial_game();
  Coloring f{1, 1, {0}};
  auto sigma = strategy_from_coloring(cg, f);
  for (auto _ : state) {
    VerificationVerdict v = verify_winning(cg->game, *sigma, 60);
    benchmark::DoNotOptimize(v.kind);
  }
}
BENCHMARK(BM_VerifyWinning)->Unit(benchmark::kMillisecond);

void BM_BuildGame(benchmark::State& state) {
  ColoringConstraint k({"c0", "c1"});
  k.allow_initial(0);
  k.allow_final(0);
  for (auto _ : state) {
    auto cg = build_game(k);
    benchmark::DoNotOptimize(cg->actions.total());
  }
}
BENCHMARK(BM_BuildGame);

}  // namespace
