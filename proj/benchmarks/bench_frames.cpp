#include <benchmark/benchmark.h>

#include "cf/frames.hpp"
#include "cf/rng.hpp"

namespace {

void BM_AnalyzeSynthesize(benchmark::State& state) {
  const int J = static_cast<int>(state.range(0));
  const cf::Domain dom{cf::DomainKind::Surface, 2, 0.0};
  const cf::Weight w{0.0, 1.0, 0.0};
  const cf::Frame fr = cf::build_frame(dom, w, J, 1.0);
  const cf::CounterRng rng(1);
  std::vector<double> coeff(cf::BasisSet(dom, w, cf::frame_band_limit(J)).size());
  for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = rng.normal(i);
  for (auto _ : state) benchmark::DoNotOptimize(cf::frame_synthesize(fr, cf::frame_analyze(fr, coeff)));
  state.counters["elements"] = static_cast<double>(fr.size());
}
BENCHMARK(BM_AnalyzeSynthesize)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
