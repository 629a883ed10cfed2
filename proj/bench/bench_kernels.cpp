// Serial reference kernels vs their OpenMP counterparts.
// Thread count follows OMP_NUM_THREADS / WAVEBOUND_THREADS.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wavebound/schemes1d.hpp"
#include "wavebound/schemes2d.hpp"
#include "wavebound/serial.hpp"
#include "wavebound/vonneumann.hpp"

using namespace wavebound;

namespace {

std::vector<double> random_field(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> q(n);
  for (double &v : q)
    v = u(rng);
  return q;
}

void BM_Step1D_Serial(benchmark::State &state) {
  const auto q = random_field(static_cast<std::size_t>(state.range(0)));
  const auto c = coefficients(1.25, 0.6);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::step(q, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Step1D_OpenMP(benchmark::State &state) {
  const auto q = random_field(static_cast<std::size_t>(state.range(0)));
  std::vector<double> out(q.size());
  const auto c = coefficients(1.25, 0.6);
  for (auto _ : state) {
    step(q, c, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

Field2D random_field_2d(std::size_t n) {
  Field2D f(n, n);
  f.data() = random_field(n * n);
  return f;
}

void BM_Step2D_Serial(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field2D q = random_field_2d(n);
  const auto c = coefficients_2d(Advection2DSpec{1.0, 1.0, 1.25, 1.25, 0.3, 0.3});
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::step_2d(q, c));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_Step2D_OpenMP(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field2D q = random_field_2d(n);
  Field2D out(n, n);
  const auto c = coefficients_2d(Advection2DSpec{1.0, 1.0, 1.25, 1.25, 0.3, 0.3});
  for (auto _ : state) {
    step_2d(q, c, out);
    benchmark::DoNotOptimize(out.data().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

SweepConfig sweep(std::int64_t grid) {
  SweepConfig cfg;
  cfg.grid_n = static_cast<std::size_t>(grid);
  cfg.angle_n = 128;
  return cfg;
}

void BM_StabilityMap_Serial(benchmark::State &state) {
  const BetaSpec b = BetaSpec::constant(1.25);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::stability_map_2d(b, b, sweep(state.range(0))));
}

void BM_StabilityMap_OpenMP(benchmark::State &state) {
  const BetaSpec b = BetaSpec::constant(1.25);
  for (auto _ : state)
    benchmark::DoNotOptimize(stability_map_2d(b, b, sweep(state.range(0))));
}

} // namespace

BENCHMARK(BM_Step1D_Serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Step1D_OpenMP)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Step2D_Serial)->Arg(256)->Arg(1024);
BENCHMARK(BM_Step2D_OpenMP)->Arg(256)->Arg(1024);
BENCHMARK(BM_StabilityMap_Serial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilityMap_OpenMP)->Arg(64)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
