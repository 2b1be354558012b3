// Kernel benchmarks: the OpenMP saturation scan against the serial reference,
// plus the two hot loops behind it (greedy completion, detection).

#include <benchmark/benchmark.h>

#include "nsat/detect.hpp"
#include "nsat/saturate.hpp"

using namespace nsat;

namespace {

SetFamily dense_test_family(int n) {
  // canonical construction plus its complement family: still small, but with
  // members spread over every cardinality, which is what detection feels
  std::vector<SubsetMask> ms = canonical_construction(n).members;
  for (SubsetMask s : canonical_construction(n).members)
    ms.push_back(full_mask(n) & ~s);
  return make_family(n, std::move(ms));
}

void BM_check_saturated_parallel(benchmark::State& state) {
  SetFamily f = canonical_construction(int(state.range(0)));
  for (auto _ : state) {
    SaturationReport r = check_saturated(f, n_pattern());
    benchmark::DoNotOptimize(r.saturated);
  }
}

void BM_check_saturated_serial(benchmark::State& state) {
  SetFamily f = canonical_construction(int(state.range(0)));
  for (auto _ : state) {
    SaturationReport r = check_saturated_serial(f, n_pattern());
    benchmark::DoNotOptimize(r.saturated);
  }
}

void BM_greedy_saturate(benchmark::State& state) {
  SetFamily seed = make_family(int(state.range(0)), {});
  for (auto _ : state) {
    SetFamily f = greedy_saturate(seed, n_pattern());
    benchmark::DoNotOptimize(f.members.data());
  }
}

void BM_induced_embeddings(benchmark::State& state) {
  SetFamily f = dense_test_family(int(state.range(0)));
  for (auto _ : state) {
    auto embs = induced_embeddings(f, n_pattern());
    benchmark::DoNotOptimize(embs.data());
  }
}

}  // namespace

BENCHMARK(BM_check_saturated_parallel)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_saturated_serial)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_greedy_saturate)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_induced_embeddings)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
