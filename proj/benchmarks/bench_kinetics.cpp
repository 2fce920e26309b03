#include <benchmark/benchmark.h>

#include "auger/kinetics.hpp"
#include "auger/steady_state.hpp"
#include "auger/sweep.hpp"

namespace {

auger::SystemParams reference_scale() {
  auger::SystemParams p;
  p.w_p = 1e3;
  p.tau_1 = 1e-7;
  p.tau_3 = 1e-7;
  p.tau_sp = 1e-3;
  p.gamma_A = 1e-9;
  p.n_total = 1e10;
  p.beta = 0.1;
  return p;
}

void BM_Integrate(benchmark::State& state) {
  const auto p = reference_scale();
  const auto opts = auger::default_solver_options(p);
  const auto coupling = state.range(0) == 0 ? auger::Coupling::isolated : auger::Coupling::replenished;
  const double t_end = 20.0 * auger::relaxation_timescale(p);
  long steps = 0;
  for (auto _ : state) {
    auto traj = auger::integrate(p, auger::ground_state(p.n_total), t_end, opts, coupling);
    steps = traj.stats().accepted;
    benchmark::DoNotOptimize(traj);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_Integrate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SteadyN2(benchmark::State& state) {
  auto p = reference_scale();
  for (auto _ : state) {
    p.w_p *= 1.0000001;
    benchmark::DoNotOptimize(auger::steady_n2(p));
  }
}
BENCHMARK(BM_SteadyN2);

void BM_PumpSweep(benchmark::State& state) {
  auger::SweepConfig c;
  c.base = reference_scale();
  c.axis = auger::SweepAxis::pump;
  c.grid = {1e-5, 1e7, static_cast<std::size_t>(state.range(0)), auger::GridScale::log};
  for (auto _ : state) benchmark::DoNotOptimize(auger::run_pump_sweep(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PumpSweep)->Arg(64)->Arg(1024);

}  // namespace
