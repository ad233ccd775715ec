#include <benchmark/benchmark.h>

#include "ratpot/exact_spectrum.hpp"
#include "ratpot/grid_oracle.hpp"
#include "ratpot/rayleigh_ritz.hpp"
#include "ratpot/recurrence.hpp"

namespace {

void BM_QuantizationRoots(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ratpot::quantization_roots(n, ratpot::Parity::even, 1.0));
}
BENCHMARK(BM_QuantizationRoots)->Arg(2)->Arg(6)->Arg(12);

void BM_ExactStates(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ratpot::exact_states(6, ratpot::Parity::odd, 1.0));
}
BENCHMARK(BM_ExactStates);

void BM_AssembleMatrices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ratpot::assemble_matrices({n, ratpot::Parity::even, 1.0}, -6.0));
}
BENCHMARK(BM_AssembleMatrices)->Arg(6)->Arg(22)->Unit(benchmark::kMicrosecond);

void BM_RayleighRitz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = ratpot::assemble_matrices({n, ratpot::Parity::even, 1.0}, -6.0);
  for (auto _ : state) benchmark::DoNotOptimize(ratpot::solve_generalized(m));
}
BENCHMARK(BM_RayleighRitz)->Arg(6)->Arg(14)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_GridSpectrum(benchmark::State& state) {
  const ratpot::GridSpec spec{ratpot::kDefaultGridHalfWidth, static_cast<int>(state.range(0)), {1.0, -6.0}};
  for (auto _ : state) benchmark::DoNotOptimize(ratpot::grid_spectrum(spec, 5));
}
BENCHMARK(BM_GridSpectrum)->Arg(4000)->Arg(32000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
