#include <benchmark/benchmark.h>

#include <random>

#include "tlink/invariants.hpp"
#include "tlink/oracles.hpp"

using namespace tlink;

namespace {

// A fixed reduced pair with the requested leaf count.
TreePair sample(int leaves, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  for (;;) {
    auto p = TreePair(random_tree(leaves, rng), random_tree(leaves, rng));
    if (is_reduced(p)) return p;
  }
}

void BM_BracketStateSum(benchmark::State& state) {
  const auto link = link_of_unreduced(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bracket(link));
  state.counters["crossings"] = link.crossing_count();
}
BENCHMARK(BM_BracketStateSum)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BracketSkein(benchmark::State& state) {
  const auto link = link_of_unreduced(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_skein(link));
}
BENCHMARK(BM_BracketSkein)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Tutte(benchmark::State& state) {
  const auto g = gamma_graph(sample(static_cast<int>(state.range(0)))).underlying();
  for (auto _ : state) benchmark::DoNotOptimize(tutte(g));
}
BENCHMARK(BM_Tutte)->DenseRange(4, 14, 2)->Unit(benchmark::kMillisecond);

void BM_Chromatic(benchmark::State& state) {
  const auto g = gamma_graph(sample(static_cast<int>(state.range(0)))).underlying();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic(g, 4));
}
BENCHMARK(BM_Chromatic)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_ColCount(benchmark::State& state) {
  const auto link = link_of_unreduced(sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(col_count(link, 5));
}
BENCHMARK(BM_ColCount)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_KauffmanPartition(benchmark::State& state) {
  const auto graph = gamma_graph(sample(static_cast<int>(state.range(0))));
  const auto a = std::polar(1.0, 3.0 * 3.14159265358979323846 / 8);
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_partition(graph, 2, a));
}
BENCHMARK(BM_KauffmanPartition)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

}  // namespace
