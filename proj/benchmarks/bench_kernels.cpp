#include <benchmark/benchmark.h>

#include "cf/kernels.hpp"

namespace {

const cf::Domain kSurface{cf::DomainKind::Surface, 2, 0.0};
const cf::Domain kSolid{cf::DomainKind::Solid, 2, 0.0};

cf::Point probe(const cf::Domain& dom, std::uint64_t i) {
  return cf::domain_point(dom, cf::halton(i, 2), cf::halton(i, 3), cf::halton(i, 5), cf::halton(i, 7));
}

// state.range(1): 0 exact profile, otherwise tabulated.
void run_localized(benchmark::State& state, const cf::Domain& dom, const cf::Weight& w) {
  const int n = static_cast<int>(state.range(0));
  const int table = state.range(1) ? 1024 * n : 0;
  const cf::KernelSeries k(cf::make_kernel_context(dom, w, 2 * n), cf::localized_coefficients(n, cf::Cutoff{}), table);
  const cf::Point p({0.3, 0.4}, dom.kind == cf::DomainKind::Surface ? 0.5 : 0.7);
  std::uint64_t i = 1;
  for (auto _ : state) {
    const cf::Point q = probe(dom, i++);
    if (q.t * p.t < 0.0) continue;
    benchmark::DoNotOptimize(k(p, q));
  }
}

void BM_LocalizedSurface(benchmark::State& state) { run_localized(state, kSurface, {0.0, 1.0, 0.0}); }
void BM_LocalizedSolid(benchmark::State& state) { run_localized(state, kSolid, {0.5, 0.5, 0.5}); }
BENCHMARK(BM_LocalizedSurface)->ArgsProduct({{16, 64}, {0, 1}});
BENCHMARK(BM_LocalizedSolid)->ArgsProduct({{16, 64}, {0, 1}});

void BM_BasisEval(benchmark::State& state) {
  const cf::BasisSet basis(kSolid, {0.5, 0.5, 0.5}, static_cast<int>(state.range(0)));
  std::vector<double> out(basis.size());
  std::uint64_t i = 1;
  for (auto _ : state) {
    basis.eval(probe(kSolid, i++), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(basis.size()));
}
BENCHMARK(BM_BasisEval)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
