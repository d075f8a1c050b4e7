#include <benchmark/benchmark.h>

#include "cf/orthopoly.hpp"

namespace {

void BM_JacobiAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  double x = -0.9;
  for (auto _ : state) {
    cf::jacobi_all(n, {0.5, -0.5}, x, out);
    benchmark::DoNotOptimize(out.data());
    x = x > 0.9 ? -0.9 : x + 1e-3;
  }
  state.SetItemsProcessed(state.iterations() * (n + 1));
}
BENCHMARK(BM_JacobiAll)->RangeMultiplier(4)->Range(16, 1024);

void BM_GaussJacobi(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cf::gauss_jacobi(m, {1.0, 0.5}));
}
BENCHMARK(BM_GaussJacobi)->RangeMultiplier(4)->Range(8, 512);

}  // namespace

BENCHMARK_MAIN();
