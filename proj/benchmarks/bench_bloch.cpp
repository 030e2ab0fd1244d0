// Microbenchmarks for the two-level integrator: cost per mechanical period
// at the step density the deviation scans actually use.

#include <benchmark/benchmark.h>

#include "holeprobe/bloch.hpp"
#include "holeprobe/constants.hpp"

using namespace holeprobe;

namespace {

bloch::TwoLevelDrive drive() {
  bloch::TwoLevelDrive d;
  d.rabi_rad_s = 1e3;
  d.detuning_rad_s = 1e5;
  d.decay_rad_s = 1e2;
  d.modulation_rad_s = 1e3;
  d.mech_frequency_rad_s = 2e4;
  return d;
}

}  // namespace

static void BM_PssCoefficients(benchmark::State& state) {
  const auto d = drive();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch::pss_coefficients(d));
  }
}
BENCHMARK(BM_PssCoefficients);

static void BM_IntegrateOnePeriod(benchmark::State& state) {
  const auto d = drive();
  const double period = kTwoPi / d.mech_frequency_rad_s;
  bloch::IntegrationOptions opts;
  opts.steps_per_period = static_cast<int>(state.range(0));
  opts.record_stride = opts.steps_per_period;  // endpoints only
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch::integrate_bloch(d, period, opts));
  }
  state.SetItemsProcessed(state.iterations() * opts.steps_per_period);
}
BENCHMARK(BM_IntegrateOnePeriod)->Arg(1000)->Arg(10000);

static void BM_PssDeviationScan(benchmark::State& state) {
  const auto d = drive();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch::pss_deviation_scan(d, 10, 1000));
  }
}
BENCHMARK(BM_PssDeviationScan);

BENCHMARK_MAIN();
