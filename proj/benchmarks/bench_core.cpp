#include <cmath>

#include <benchmark/benchmark.h>

#include <l1fourier/families.hpp>
#include <l1fourier/kernels.hpp>
#include <l1fourier/quadrature.hpp>
#include <l1fourier/seqclass.hpp>
#include <l1fourier/series.hpp>

using namespace l1f;

namespace {

void BM_DirichletNorm(benchmark::State& state) {
  const auto k = state.range(0);
  const auto grid = quad::build_grid(static_cast<double>(2 * k + 1), 1e-10);
  const kernels::KernelContext ctx(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::kernel_l1_norms(ctx, grid));
  state.counters["nodes"] = static_cast<double>(grid.node_count());
}
BENCHMARK(BM_DirichletNorm)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMillisecond);

void BM_TrigPolynomialDense(benchmark::State& state) {
  const auto n = state.range(0);
  const auto c = make_family({"log_decay", {1.0, 2.0}, std::nullopt});
  const series::TrigPolynomial p(c, n + 1, 2 * n);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p(x));
    x = std::fmod(x + 0.37, 3.0);
  }
}
BENCHMARK(BM_TrigPolynomialDense)->RangeMultiplier(4)->Range(64, 16384);

void BM_TrigPolynomialComplex(benchmark::State& state) {
  const auto n = state.range(0);
  const auto c = make_family({"orvqm_complex", {0.5, 1.0}, Symmetry::None});
  const series::TrigPolynomial p(c, 0, n);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p(x));
    x = std::fmod(x + 0.37, 3.0);
  }
}
BENCHMARK(BM_TrigPolynomialComplex)->RangeMultiplier(4)->Range(64, 16384);

void BM_CauchyGap(benchmark::State& state) {
  const auto n = state.range(0);
  const auto c = make_family({"log_decay", {0.0, 1.0}, std::nullopt});
  const auto grid = quad::build_grid(static_cast<double>(2 * n), 1e-8);
  for (auto _ : state) benchmark::DoNotOptimize(series::cauchy_gap(c, n, 2 * n, grid));
}
BENCHMARK(BM_CauchyGap)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_CheckGbv(benchmark::State& state) {
  const auto c = make_family({"gbv_gapped", {4.0}, std::nullopt});
  for (auto _ : state) benchmark::DoNotOptimize(seqclass::check_gbv(c, state.range(0)));
}
BENCHMARK(BM_CheckGbv)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
