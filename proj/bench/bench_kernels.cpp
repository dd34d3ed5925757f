// Serial against OpenMP timings for the main kernels. The second argument
// selects the path: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "orbigeo/classifier.hpp"
#include "orbigeo/extremal.hpp"
#include "orbigeo/kernels.hpp"
#include "orbigeo/self_intersection.hpp"

using namespace orbigeo;

namespace {

Execution path(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_WordTable(benchmark::State& state) {
  const TriangleGroup g = build_group(TriangleSignature::make(3, 3, 4));
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    WordTable table(g, length, path(state));
    benchmark::DoNotOptimize(table.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reduced_word_count(length)));
}
BENCHMARK(BM_WordTable)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SelfIntersection(benchmark::State& state) {
  const TriangleGroup g = build_group(TriangleSignature::make(3, 3, 4));
  const MoebiusMap x = g.pair_element(PairWord::BA);
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto r = self_intersection_count(g, x, budget, {0, path(state)});
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_SelfIntersection)->ArgsProduct({{6, 8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ClassifyGrid(benchmark::State& state) {
  const auto sigs = signature_grid(static_cast<int>(state.range(0)), true);
  for (auto _ : state) {
    const auto r = classify_grid(sigs, kDefaultTolerance, path(state));
    benchmark::DoNotOptimize(r.records.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sigs.size()));
}
BENCHMARK(BM_ClassifyGrid)->ArgsProduct({{24, 48}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MinFigure8(benchmark::State& state) {
  for (auto _ : state) {
    const auto r = min_figure8(0, static_cast<int>(state.range(0)), path(state));
    benchmark::DoNotOptimize(r.has_value());
  }
}
BENCHMARK(BM_MinFigure8)->ArgsProduct({{16, 32}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
