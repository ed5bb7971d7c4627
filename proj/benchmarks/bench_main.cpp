#include <benchmark/benchmark.h>

#include <vector>

#include "etaq/enumerate.hpp"
#include "etaq/numthy.hpp"
#include "etaq/eta_quotient.hpp"
#include "etaq/qseries.hpp"
#include "etaq/verify.hpp"

namespace {

void BM_Delta(benchmark::State& state, etaq::ExpansionMethod method) {
  const etaq::EtaQuotient delta(1, {{1, 24}});
  for (auto _ : state) benchmark::DoNotOptimize(etaq::q_expansion(delta, state.range(0), method));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Delta, sparse, etaq::ExpansionMethod::Sparse)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK_CAPTURE(BM_Delta, dense, etaq::ExpansionMethod::Dense)->RangeMultiplier(4)->Range(64, 1024);

void BM_Partitions(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etaq::eta_power(1, -1, state.range(0)));
}
BENCHMARK(BM_Partitions)->RangeMultiplier(4)->Range(256, 16384);

void BM_MixedQuotient(benchmark::State& state) {
  const etaq::EtaQuotient e(35, {{1, -1}, {5, 3}, {7, 3}, {35, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(etaq::q_expansion(e, state.range(0)));
}
BENCHMARK(BM_MixedQuotient)->Arg(500)->Arg(2000);

void BM_CountPrimeGrid(benchmark::State& state) {
  for (auto _ : state) {
    std::int64_t total = 0;
    for (std::int64_t p = 5; p <= 97; ++p) {
      if (!etaq::is_prime(p)) continue;
      for (std::int64_t k = 1; k <= 48; ++k)
        if (etaq::weight_condition(p, k)) total += static_cast<std::int64_t>(etaq::list_cusp_eta(p, k).size());
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CountPrimeGrid)->Unit(benchmark::kMillisecond);

void BM_SquarefreeEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etaq::enumerate_squarefree(state.range(0), state.range(1)));
}
BENCHMARK(BM_SquarefreeEnumeration)->Args({15, 2})->Args({35, 2})->Args({77, 2})->Unit(benchmark::kMillisecond);

void BM_IndependenceRank(benchmark::State& state) {
  const std::int64_t p = state.range(0), k = state.range(1);
  std::vector<etaq::EtaQuotient> all = etaq::list_cusp_eta(p, k);
  for (const auto& e : etaq::noncusp_eta(p, k)) all.push_back(e);
  for (auto _ : state) benchmark::DoNotOptimize(etaq::independence_rank(all, k, p));
  state.counters["quotients"] = static_cast<double>(all.size());
}
BENCHMARK(BM_IndependenceRank)->Args({11, 24})->Args({31, 24})->Args({11, 120})->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(etaq::sweep(31, 24, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
