#include <benchmark/benchmark.h>

#include "syt/counting.hpp"
#include "syt/excited.hpp"
#include "syt/schur.hpp"
#include "syt/sorting.hpp"
#include "syt/walks.hpp"

namespace {

syt::SkewShape straight(std::vector<long> parts) {
  return syt::SkewShape(syt::Partition(std::move(parts)), syt::Partition{});
}

void CountPaths(benchmark::State& state) {
  const long m = state.range(0);
  syt::SkewShape s = straight({2 * m, m});
  for (auto _ : state) {
    syt::clear_count_cache();
    benchmark::DoNotOptimize(syt::count_paths(s));
  }
}
BENCHMARK(CountPaths)->Arg(10)->Arg(20)->Arg(40);

void CountDeterminant(benchmark::State& state) {
  const long m = state.range(0);
  syt::SkewShape s = straight({2 * m, m});
  for (auto _ : state) benchmark::DoNotOptimize(syt::count_determinant(s));
}
BENCHMARK(CountDeterminant)->Arg(10)->Arg(20)->Arg(40);

void CountNhlfFlagged(benchmark::State& state) {
  syt::SkewShape s(syt::Partition({8, 6, 4}), syt::Partition({3, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(syt::count_nhlf_flagged(s));
}
BENCHMARK(CountNhlfFlagged);

void DeltaPoset(benchmark::State& state) {
  const long m = state.range(0);
  syt::SkewShape s = straight({2 * m, m});
  for (auto _ : state) benchmark::DoNotOptimize(syt::delta_poset(s).delta);
}
BENCHMARK(DeltaPoset)->Arg(10)->Arg(20)->Arg(40);

void SchurBialternant(benchmark::State& state) {
  syt::Partition mu({6, 4, 2, 1});
  std::vector<syt::Rat> x{syt::Rat(19), syt::Rat(13), syt::Rat(7), syt::Rat(2)};
  syt::EvaluationPoint pt(x);
  for (auto _ : state) benchmark::DoNotOptimize(syt::schur_eval(mu, pt));
}
BENCHMARK(SchurBialternant);

void SampleTableau(benchmark::State& state) {
  syt::SkewShape s = straight({6, 5, 4});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(syt::sample_tableau(s, seed++).states.size());
}
BENCHMARK(SampleTableau);

}  // namespace

BENCHMARK_MAIN();
