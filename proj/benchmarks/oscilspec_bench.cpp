#include <benchmark/benchmark.h>

#include "oscilspec/eigensolver.hpp"
#include "oscilspec/fd_oracle.hpp"
#include "oscilspec/observables.hpp"
#include "oscilspec_cli/config.hpp"
#include "oscilspec_cli/presets.hpp"

using namespace oscilspec;

namespace {

BoundaryProblem problem(const char* name, int digits) {
  cli::RunConfig config;
  config.digits = digits;
  return cli::make_problem(*cli::find_preset(name), config);
}

// Coefficient generation; the argument is the truncation order.
void BM_SeriesCoefficients(benchmark::State& state) {
  const auto bp = problem("A", 20);
  const BigReal e(std::string_view("-2"), 80);
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_coefficients(bp.potential, e, Parity::Even, static_cast<int>(state.range(0)), 80));
  }
}
BENCHMARK(BM_SeriesCoefficients)->Arg(100)->Arg(200)->Arg(400);

void BM_BoundaryValue(benchmark::State& state) {
  const auto bp = problem("A", static_cast<int>(state.range(0)));
  const BigReal e(std::string_view("-1.5"), bp.target_digits + 20);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_value(bp, Parity::Even, e));
}
BENCHMARK(BM_BoundaryValue)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_GroundState(benchmark::State& state) {
  const auto bp = problem("A", 20);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(bp, 1));
}
BENCHMARK(BM_GroundState)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_Moments(benchmark::State& state) {
  const auto bp = problem("A", 20);
  const auto ground = spectrum(bp, 1).front();
  const auto ef = eigenfunction(bp, ground);
  for (auto _ : state) benchmark::DoNotOptimize(moments(bp, ef, {1, 2, 3, 4, 5}));
}
BENCHMARK(BM_Moments)->Unit(benchmark::kMillisecond);

void BM_FDSpectrum(benchmark::State& state) {
  const auto bp = problem("A", 20);
  const long double L = bp.half_width.to_long_double();
  for (auto _ : state) {
    benchmark::DoNotOptimize(fd_spectrum(bp.potential, L, static_cast<int>(state.range(0)), 4));
  }
}
BENCHMARK(BM_FDSpectrum)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
