#include <benchmark/benchmark.h>

#include <random>

#include "tracegames/trace.hpp"

namespace {

using namespace tracegames;

// Ring-shaped dependency alphabet: letter i touches processes i and i+1.
AlphabetRef ring_alphabet(std::size_t letters) {
  auto alphabet = std::make_shared<DependencyAlphabet>();
  for (std::size_t p = 0; p < letters; ++p)
    alphabet->add_process("p" + std::to_string(p));
  for (std::size_t a = 0; a < letters; ++a)
    alphabet->add_letter("l" + std::to_string(a),
                         {"p" + std::to_string(a),
                          "p" + std::to_string((a + 1) % letters)});
  return alphabet;
}

Word random_word(std::size_t letters, std::size_t len, unsigned seed) {
  std::mt19937 rng(seed);
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(static_cast<LetterId>(rng() % letters));
  return w;
}

void BM_Normalize(benchmark::State& state) {
  auto alphabet = ring_alphabet(6);
  Word w = random_word(6, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    Trace t = Trace::normalize(alphabet, w);
    benchmark::DoNotOptimize(t.canonical().data());
  }
}
BENCHMARK(BM_Normalize)->Arg(16)->Arg(64)->Arg(256);

void BM_View(benchmark::State& state) {
  auto alphabet = ring_alphabet(6);
  Word w = random_word(6, static_cast<std::size_t>(state.range(0)), 2);
  Trace t = Trace::normalize(alphabet, w);
  for (auto _ : state) {
    for (ProcessId p = 0; p < alphabet->process_count(); ++p)
      benchmark::DoNotOptimize(view(t, p).size());
  }
}
BENCHMARK(BM_View)->Arg(16)->Arg(64);

void BM_IsPrefix(benchmark::State& state) {
  auto alphabet = ring_alphabet(6);
  Word w = random_word(6, static_cast<std::size_t>(state.range(0)), 3);
  Trace v = Trace::normalize(alphabet, w);
  Trace u = Trace::normalize(
      alphabet, Word(w.begin(), w.begin() + w.size() / 2));
  for (auto _ : state) benchmark::DoNotOptimize(is_prefix(u, v));
}
BENCHMARK(BM_IsPrefix)->Arg(16)->Arg(64);

}  // namespace
