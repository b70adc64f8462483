#include <benchmark/benchmark.h>

#include <random>

#include "radokit/columns_condition.hpp"
#include "radokit/rado_search.hpp"
#include "radokit/uniformity.hpp"

using namespace radokit;

static void BM_SchurNumber(benchmark::State& state) {
  const IntegerMatrix schur = IntegerMatrix::from_rows({{1, 1, -1}});
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const SearchResult res = rado_number(schur, r, 60);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_SchurNumber)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MpcThreshold(benchmark::State& state) {
  for (auto _ : state) {
    const SearchResult res = mpc_threshold(MpcParams{1, 1, 1}, 2, 40);
    benchmark::DoNotOptimize(res.value);
  }
}
BENCHMARK(BM_MpcThreshold)->Unit(benchmark::kMillisecond);

static void BM_GowersNorm(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const int k = static_cast<int>(state.range(1));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> v;
  for (std::int64_t i = 0; i < n; ++i) v.push_back(std::polar(unit(rng), 6.283185307179586 * unit(rng)));
  const ModFunction f(n, std::move(v));
  for (auto _ : state) benchmark::DoNotOptimize(gowers_norm(f, k));
}
BENCHMARK(BM_GowersNorm)->Args({31, 2})->Args({31, 3})->Args({53, 4})->Unit(benchmark::kMillisecond);

static void BM_FindWitness(benchmark::State& state) {
  const IntegerMatrix a = IntegerMatrix::from_rows({{1, 2, -1, 3, -2, 1, -3, 2}, {2, -1, 1, 0, 1, -2, 1, -1}});
  for (auto _ : state) benchmark::DoNotOptimize(find_witness(a).has_value());
}
BENCHMARK(BM_FindWitness)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
