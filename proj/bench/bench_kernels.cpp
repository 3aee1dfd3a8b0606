// Serial against OpenMP timings for the batch kernels. Each benchmark takes the
// execution mode as its first argument: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "onsager/kernels.hpp"

using namespace onsager;

namespace {

Exec mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void BM_BracketTable(benchmark::State& state) {
  const auto max_sum = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket_table(BasisId::uu, max_sum, mode(state)));
  }
}
BENCHMARK(BM_BracketTable)->ArgsProduct({{0, 1}, {6, 10}})->Unit(benchmark::kMillisecond);

void BM_TransitionTable(benchmark::State& state) {
  const auto max_index = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_table(BasisId::uu, BasisId::du, max_index, mode(state)));
  }
}
BENCHMARK(BM_TransitionTable)->ArgsProduct({{0, 1}, {8, 12}})->Unit(benchmark::kMillisecond);

void BM_DecomposeBatch(benchmark::State& state) {
  const auto elems = random_loop_elems(static_cast<std::size_t>(state.range(1)), 7);
  const PathLabel label = PathLabel::canonical();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_batch(label, elems, mode(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_DecomposeBatch)->ArgsProduct({{0, 1}, {100, 1000}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
