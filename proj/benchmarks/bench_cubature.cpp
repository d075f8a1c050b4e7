#include <benchmark/benchmark.h>

#include "cf/quadrature.hpp"

namespace {

void BM_SeparatedSet(benchmark::State& state) {
  const cf::Domain dom{static_cast<cf::DomainKind>(state.range(0)), 2, 0.0};
  const double eps = 1.0 / static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cf::build_separated(dom, eps));
}
BENCHMARK(BM_SeparatedSet)->ArgsProduct({{0, 1}, {8, 32}})->Unit(benchmark::kMillisecond);

void BM_CubatureSurface(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cf::cubature_build({cf::DomainKind::Surface, 2, 0.0}, {0.0, 0.5, 0.0}, n, 1.0, 1e-10));
  }
}
BENCHMARK(BM_CubatureSurface)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CubatureSolid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cf::cubature_build({cf::DomainKind::Solid, 2, 0.0}, {0.5, 0.5, 0.5}, n, 1.0, 1e-10));
  }
}
BENCHMARK(BM_CubatureSolid)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
