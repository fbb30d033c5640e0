// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "sbs/kernels.hpp"

namespace {

const sbs::ModelParams kParams = sbs::ModelParams::at_resonance(5.0, 1.0, 1.0);

void BM_TrajectorySerial(benchmark::State& state) {
  const auto times = sbs::uniform_times(2.0, static_cast<std::size_t>(state.range(0)));
  const auto s0 = sbs::initial_covariance(sbs::ThermalPhonon{0.5});
  for (auto _ : state) benchmark::DoNotOptimize(sbs::trajectory_serial(s0, times, kParams));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TrajectoryParallel(benchmark::State& state) {
  const auto times = sbs::uniform_times(2.0, static_cast<std::size_t>(state.range(0)));
  const auto s0 = sbs::initial_covariance(sbs::ThermalPhonon{0.5});
  for (auto _ : state) benchmark::DoNotOptimize(sbs::trajectory_parallel(s0, times, kParams));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

sbs::SweepSpec detuning_sweep(std::size_t count) {
  sbs::SweepSpec spec;
  spec.base = kParams;
  spec.axis = sbs::SweepAxis::Detuning;
  spec.from = -0.5;
  spec.to = 0.5;
  spec.count = count;
  spec.t = 0.5;
  return spec;
}

void BM_DetuningSweepSerial(benchmark::State& state) {
  const auto spec = detuning_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sbs::sweep_serial(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DetuningSweepParallel(benchmark::State& state) {
  const auto spec = detuning_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sbs::sweep_parallel(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_TrajectorySerial)->Arg(1024)->Arg(16384);
BENCHMARK(BM_TrajectoryParallel)->Arg(1024)->Arg(16384);
BENCHMARK(BM_DetuningSweepSerial)->Arg(16)->Arg(64);
BENCHMARK(BM_DetuningSweepParallel)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
