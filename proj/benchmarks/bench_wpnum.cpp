#include <benchmark/benchmark.h>

#include "wpnum/annulus.hpp"
#include "wpnum/diff.hpp"
#include "wpnum/ensemble.hpp"
#include "wpnum/project.hpp"
#include "wpnum/quad.hpp"
#include "wpnum/schwarz.hpp"
#include "wpnum/wp.hpp"

namespace {

using namespace wpnum;

void BM_DiskRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(disk_rule(n, 4 * n));
}
BENCHMARK(BM_DiskRule)->Arg(16)->Arg(64)->Arg(128);

void BM_Integrate(benchmark::State& state) {
  const auto rule = disk_rule(64, 256);
  Rng rng(1);
  const HarmonicBeltrami mu = random_harmonic(rng, 20);
  const auto samples = sample(rule, mu.as_differential().field());
  for (auto _ : state) benchmark::DoNotOptimize(integrate(rule, samples));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(rule.size()));
}
BENCHMARK(BM_Integrate);

void BM_LpNormGrid(benchmark::State& state) {
  const auto rule = disk_rule(64, 256);
  Rng rng(2);
  const Differential mu = random_harmonic(rng, 10).as_differential();
  const double p = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lp_norm(mu, p, rule));
}
BENCHMARK(BM_LpNormGrid)->Arg(1)->Arg(2)->Arg(4);

void BM_Moments(benchmark::State& state) {
  const auto rule = disk_rule(64, 256);
  Rng rng(3);
  const HarmonicBeltrami mu = random_harmonic(rng, 16);
  const auto samples = sample(rule, mu.as_differential().field());
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moments(rule, samples, N));
}
BENCHMARK(BM_Moments)->Arg(8)->Arg(32)->Arg(64);

void BM_KDirect(benchmark::State& state) {
  const auto rule = disk_rule(64, 256);
  Rng rng(4);
  const HarmonicBeltrami mu = random_harmonic(rng, 8);
  const auto samples = sample(rule, mu.as_differential().field());
  for (auto _ : state) benchmark::DoNotOptimize(k_project_direct(rule, samples, {0.3, 0.4}));
}
BENCHMARK(BM_KDirect);

void BM_NehariCheck(benchmark::State& state) {
  Rng rng(5);
  const PowerSeries S = random_polynomial(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nehari_tnt_check(S));
}
BENCHMARK(BM_NehariCheck)->Arg(5)->Arg(20);

void BM_SchwarzianRoundTrip(benchmark::State& state) {
  Rng rng(6);
  const PowerSeries S = random_polynomial(rng, 10) * Complex(0.05);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const PowerSeries A = pre_schwarzian_from_schwarzian(S, 0.01, N);
    benchmark::DoNotOptimize(schwarzian(map_from_pre_schwarzian(A, 1.0)));
  }
}
BENCHMARK(BM_SchwarzianRoundTrip)->Arg(16)->Arg(64);

void BM_WulfSup(benchmark::State& state) {
  Rng rng(7);
  const LaurentSeries s = random_laurent(rng, -20, 20, 1.0, 2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sup_weighted([&s](Complex z) { return s(z); }, 1.5, {128, 256, 8, 12}));
}
BENCHMARK(BM_WulfSup);

void BM_Gram(benchmark::State& state) {
  const auto rule = disk_rule(64, 256);
  for (auto _ : state) benchmark::DoNotOptimize(wp_gram(10, rule));
}
BENCHMARK(BM_Gram);

}  // namespace

BENCHMARK_MAIN();
