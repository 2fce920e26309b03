#include <benchmark/benchmark.h>

#include "auger/coherence.hpp"

namespace {

void BM_SingleShot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auger::IonizationTimeDistribution dist{auger::TimeFamily::gaussian, 0.0, 1.0};
  const auto times = auger::sample_ionization_times(dist, n, 7);
  const auto omega = auger::default_omega_grid(1.0, 128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(auger::spectral_density_single_shot(times, {0.0, 0.1}, omega));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 128);
}
BENCHMARK(BM_SingleShot)->Arg(32)->Arg(1024);

void BM_MonteCarlo(benchmark::State& state) {
  const auger::IonizationTimeDistribution dist{auger::TimeFamily::gaussian, 0.0, 1.0};
  const auto omega = auger::default_omega_grid(1.0, 128);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        auger::monte_carlo_expected_density(dist, {0.0, 0.1}, 32, 4096, 11, omega, threads));
  }
}
BENCHMARK(BM_MonteCarlo)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
