#include <benchmark/benchmark.h>

#include "schurbound/schurbound.hpp"

using namespace schurbound;

static void BM_EigHermitian(benchmark::State& state) {
  Rng rng(1);
  const HermitianMatrix a = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(a));
}
BENCHMARK(BM_EigHermitian)->Arg(8)->Arg(16)->Arg(32);

static void BM_Mu(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix a = random_hermitian(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(mu(a, n / 2));
  state.counters["subsets"] = static_cast<double>(binomial(n, n / 2));
}
BENCHMARK(BM_Mu)->Arg(6)->Arg(10)->Arg(14);

static void BM_KruskalRankPsd(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix a = random_psd_with_kruskal_rank(rng, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(kruskal_rank(a));
}
BENCHMARK(BM_KruskalRankPsd)->Arg(6)->Arg(10);

static void BM_QuantitativeBound(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix a = random_psd(rng, n, n);
  const HermitianMatrix b = random_psd(rng, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(quantitative_bound(a, b));
}
BENCHMARK(BM_QuantitativeBound)->Arg(4)->Arg(7)->Arg(10);

static void BM_DoaBound(benchmark::State& state) {
  Rng rng(5);
  DoaScenarioShape shape;
  shape.sigma_rank = 1;
  const DoaScenario s = random_doa_scenario(rng, shape);
  for (auto _ : state) benchmark::DoNotOptimize(doa_bound(s));
}
BENCHMARK(BM_DoaBound);
BENCHMARK_MAIN();
