#include <benchmark/benchmark.h>

#include <random>

#include "semichomp/semigroup.hpp"
#include "semichomp/state_codec.hpp"

using namespace semichomp;

namespace {

const NumericalSemigroup& sample() {
  static const NumericalSemigroup s{7, 8, 9, 10};  // 12 gaps
  return s;
}

// Random legal lines of play, replayed through one of the two move kernels.
template <bool Fast>
void BM_ApplyMove(benchmark::State& state) {
  const StateCodec codec(sample());
  std::mt19937_64 rng(1);
  std::vector<std::pair<GameState, Int>> moves;
  for (int line = 0; line < 64; ++line) {
    GameState st = codec.initial_state(sample().frobenius() + 1 + static_cast<Int>(rng() % 40));
    while (true) {
      const auto els = codec.elements(st);
      if (els.size() <= 1) break;
      const Int y = els[1 + rng() % (els.size() - 1)];
      moves.emplace_back(st, y);
      st = codec.apply_move(st, y);
    }
  }
  for (auto _ : state)
    for (const auto& [st, y] : moves)
      benchmark::DoNotOptimize(Fast ? codec.apply_move_fast(st, y) : codec.apply_move(st, y));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(moves.size()));
}
BENCHMARK(BM_ApplyMove<false>)->Name("apply_move/checked");
BENCHMARK(BM_ApplyMove<true>)->Name("apply_move/fast");

void BM_Apery(benchmark::State& state) {
  const NumericalSemigroup s{static_cast<Int>(state.range(0)), static_cast<Int>(state.range(0) + 1),
                             static_cast<Int>(state.range(0) + 3)};
  for (auto _ : state) benchmark::DoNotOptimize(apery(s, 3 * state.range(0)));
}
BENCHMARK(BM_Apery)->Arg(6)->Arg(12)->Arg(24);

}  // namespace
