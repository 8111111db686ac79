#include <benchmark/benchmark.h>

#include "spheregreen/closedform/assemble.hpp"
#include "spheregreen/green.hpp"
#include "spheregreen/solver.hpp"
#include "spheregreen/sphere.hpp"

using namespace spheregreen;

static void BM_GegenbauerBatch(benchmark::State& state) {
  const auto ctx = make_context(5);
  const int l_max = static_cast<int>(state.range(0));
  double t = 0.3;
  for (auto _ : state) {
    auto v = gegenbauer_batch(ctx, l_max, t);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetComplexityN(l_max);
}
BENCHMARK(BM_GegenbauerBatch)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_SeriesAbel(benchmark::State& state) {
  const auto p = make_parameter(make_context(static_cast<int>(state.range(0))), 3.7);
  for (auto _ : state) benchmark::DoNotOptimize(green_eval_series_adaptive(p, 0.4).value);
}
BENCHMARK(BM_SeriesAbel)->DenseRange(2, 8, 3);

static void BM_DoubleIntegral(benchmark::State& state) {
  const auto p = make_parameter(make_context(static_cast<int>(state.range(0))), 3.7);
  for (auto _ : state) benchmark::DoNotOptimize(green_eval_integral(p, 0.4).value);
}
BENCHMARK(BM_DoubleIntegral)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

static void BM_Closed(benchmark::State& state) {
  const auto p = parameter_from_L(make_context(7), -3.0);
  for (auto _ : state) benchmark::DoNotOptimize(green_eval_closed(p, 0.4));
}
BENCHMARK(BM_Closed);

static void BM_Derivation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closedform::derive_green_n2family(n, 2).G.terms().size());
}
BENCHMARK(BM_Derivation)->DenseRange(2, 10, 4)->Unit(benchmark::kMillisecond);

static void BM_Solve(benchmark::State& state) {
  const auto ctx = make_context(4);
  const auto p = make_parameter(ctx, 2.5);
  ZonalSpectrum f(ctx, static_cast<int>(state.range(0)));
  for (int l = 0; l <= f.l_max(); ++l) f.coeffs[l] = 1.0 / (1 + l);
  for (auto _ : state) benchmark::DoNotOptimize(solve_helmholtz(p, f).residual_norm);
}
BENCHMARK(BM_Solve)->RangeMultiplier(8)->Range(32, 4096);

BENCHMARK_MAIN();
