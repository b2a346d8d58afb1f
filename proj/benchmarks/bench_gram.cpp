#include <benchmark/benchmark.h>

#include "tlink/positivity.hpp"

using namespace tlink;

namespace {

void BM_GramSweep(benchmark::State& state) {
  InvariantSpec spec;
  spec.kind = static_cast<InvariantKind>(state.range(0));
  spec.q = spec.kind == InvariantKind::colourings ? 3 : 2;
  for (auto _ : state) benchmark::DoNotOptimize(positivity_sweep(4, 6, spec, 10, 1));
  state.SetLabel(kind_name(spec.kind));
}
BENCHMARK(BM_GramSweep)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_ReferenceGram(benchmark::State& state) {
  InvariantSpec spec;
  spec.kind = InvariantKind::bracket;
  spec.q = 2;
  const auto elements = reference_quadruple();
  for (auto _ : state) benchmark::DoNotOptimize(gram_report(elements, spec));
}
BENCHMARK(BM_ReferenceGram)->Unit(benchmark::kMicrosecond);

}  // namespace
