#include <benchmark/benchmark.h>

#include "engel/heisenberg.hpp"
#include "engel/symbol.hpp"

using namespace engel;

namespace {

TestFunction4 shifted_gaussian() {
  return TestFunction4::gaussian({1.5, 0.8, 1.2, 2.0}, {0.3, -0.2, 0.1, 0.4}, {0.5, 0.0, -0.3, 0.2});
}

void BM_GroupLaw(benchmark::State& state) {
  Point x{0.3, -0.2, 0.1, 0.4}, y{0.5, 0.4, -0.3, 0.2};
  for (auto _ : state) {
    x = multiply(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_GroupLaw);

void BM_GroupFourier(benchmark::State& state) {
  const Grid1D grid(12.0, static_cast<int>(state.range(0)));
  const TestFunction4 f = shifted_gaussian();
  for (auto _ : state) benchmark::DoNotOptimize(gft_via_kernel(f, RepParams(2.0, 3.0), grid));
}
BENCHMARK(BM_GroupFourier)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DirectIntegral(benchmark::State& state) {
  const TestFunction4 f = shifted_gaussian();
  const Wavepacket h = Wavepacket::gaussian(1.0, 0.2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(gft_direct(f, RepParams(1.0, 0.0), h, 0.3));
}
BENCHMARK(BM_DirectIntegral)->Unit(benchmark::kMicrosecond);

void BM_MuIntegratedTrace(benchmark::State& state) {
  const TestFunction4 g = TestFunction4::gaussian({1.0, 1.0, 1.0, 1.0});
  const TestFunction4 f = shifted_gaussian();
  const Point x{0.2, -0.1, 0.3, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(mu_integrated_trace(g, f, 0.9, x));
}
BENCHMARK(BM_MuIntegratedTrace)->Unit(benchmark::kMicrosecond);

void BM_IdentitySeminorm(benchmark::State& state) {
  const Grid1D grid(12.0, static_cast<int>(state.range(0)));
  SeminormSpec spec;
  spec.a = spec.b = spec.c = 1;
  for (auto _ : state) benchmark::DoNotOptimize(seminorm(SymbolField::identity(), spec, grid).value);
}
BENCHMARK(BM_IdentitySeminorm)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_WeylOscillator(benchmark::State& state) {
  const Grid1D grid(10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weyl_quantize(harmonic_oscillator_symbol(), grid));
}
BENCHMARK(BM_WeylOscillator)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
