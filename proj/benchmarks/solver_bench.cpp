#include <benchmark/benchmark.h>

#include "semichomp/decider.hpp"
#include "semichomp/poset.hpp"

using namespace semichomp;

namespace {

void BM_SolveGrid(benchmark::State& state) {
  const FinitePoset p = grid_poset(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve(p).mover_wins);
}
BENCHMARK(BM_SolveGrid)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_SolveApery(benchmark::State& state) {
  const NumericalSemigroup s{9, 10, 11, 12};
  const FinitePoset p = apery_poset(s, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve(p).mover_wins);
}
BENCHMARK(BM_SolveApery)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

// Bounded first-move search, the inner loop of the table command.
void BM_SmallestWinningMove(benchmark::State& state) {
  const NumericalSemigroup s{6, 7, 11};
  for (auto _ : state) benchmark::DoNotOptimize(smallest_winning_move(s, 30));
}
BENCHMARK(BM_SmallestWinningMove)->Unit(benchmark::kMillisecond);

void BM_SearchIntervalCell(benchmark::State& state) {
  const NumericalSemigroup s{7, 8, 9, 10};
  for (auto _ : state) benchmark::DoNotOptimize(smallest_winning_move(s, 49));
}
BENCHMARK(BM_SearchIntervalCell)->Unit(benchmark::kMillisecond);

void BM_DecideSymmetric(benchmark::State& state) {
  const NumericalSemigroup s{4, 5};
  for (auto _ : state) benchmark::DoNotOptimize(decide_winner(s).winner);
}
BENCHMARK(BM_DecideSymmetric)->Unit(benchmark::kMillisecond);

}  // namespace
