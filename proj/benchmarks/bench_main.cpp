#include <benchmark/benchmark.h>

#include "jackpos/falling_factorial.hpp"
#include "jackpos/hooktab.hpp"
#include "jackpos/jack.hpp"
#include "jackpos/shifted.hpp"
#include "jackpos/stanley.hpp"

using namespace jackpos;

static void BM_HatK(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (const Partition& l : partitions_of(n))
      for (const Partition& m : partitions_of(n)) benchmark::DoNotOptimize(hatK(l, m));
}
BENCHMARK(BM_HatK)->DenseRange(3, 6);

static void BM_ReconstructKo(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  Partition mu{k - 1, 1};
  for (auto _ : st) benchmark::DoNotOptimize(to_falling_factorial(reconstruct_multirect(ko_function(mu), k, 2)));
}
BENCHMARK(BM_ReconstructKo)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_KoSym(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  Partition mu{k};
  for (auto _ : st) benchmark::DoNotOptimize(ko_multirect_sym(mu, 2));
}
BENCHMARK(BM_KoSym)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_Bijection(benchmark::State& st) {
  Partition l{3, 2, 1};
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st)
    for_each_hook_tableau(l, k, [](const HookTableau& T) { benchmark::DoNotOptimize(phi(psi(T))); });
}
BENCHMARK(BM_Bijection)->DenseRange(1, 4);

static void BM_OnePartFF(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ko_onepart_ff(k, 2));
}
BENCHMARK(BM_OnePartFF)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
