// Serial reference vs OpenMP kernels on the test rings.

#include <benchmark/benchmark.h>

#include "golodkit/homology/koszul.hpp"
#include "golodkit/homology/resolution.hpp"
#include "support/test_rings.hpp"

using namespace golodkit;

namespace {

RingPtr ring_for(int which) {
  switch (which) {
    case 0: return testrings::compressed();
    case 1: return testrings::ring_s();
    default: return testrings::gasharov_peeva();
  }
}

const char* name_for(int which) {
  switch (which) {
    case 0: return "compressed";
    case 1: return "S";
    default: return "gasharov-peeva";
  }
}

template <Execution ex>
void BM_resolve(benchmark::State& state) {
  const auto k = testrings::residue(ring_for(static_cast<int>(state.range(0))));
  const auto steps = static_cast<unsigned>(state.range(1));
  ResolveOptions opt;
  opt.execution = ex;
  opt.max_columns = 200000;
  std::size_t total = 0;
  for (auto _ : state) {
    const Resolution r = resolve(k, steps, opt);
    total = r.betti.totals().back();
    benchmark::DoNotOptimize(total);
  }
  state.SetLabel(std::string(name_for(static_cast<int>(state.range(0)))) + " beta_" + std::to_string(steps) + "=" +
                 std::to_string(total));
}

template <Execution ex>
void BM_koszul(benchmark::State& state) {
  const auto r = ring_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_homology(*r, ex).ranks);
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
}

void resolve_args(benchmark::internal::Benchmark* b) {
  b->Args({0, 7})->Args({1, 7})->Args({2, 5})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_resolve<Execution::serial>)->Apply(resolve_args);
BENCHMARK(BM_resolve<Execution::parallel>)->Apply(resolve_args);
BENCHMARK(BM_koszul<Execution::serial>)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_koszul<Execution::parallel>)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
