// Microbenchmarks for the interaction-energy evaluations: the adaptive
// quadrature is the only expensive path in the library, and the closed
// forms should stay quotable as "free" next to it.

#include <benchmark/benchmark.h>

#include "holeprobe/config.hpp"
#include "holeprobe/constants.hpp"
#include "holeprobe/coupling.hpp"
#include "holeprobe/model.hpp"

using namespace holeprobe;

namespace {

struct Setup {
  cli::ScenarioConfig cfg = cli::default_config();
  CantileverSpec cant = cfg.cantilever();
  IonEnsembleSpec ions = cfg.ions();
  ProbeSpec probe = cfg.probe();
  model::MechanicsDerived mech = model::derive_mechanics(cant, cfg.environment());
  double k = model::strain_coupling_k(cant, ions);
  BurnSpec burn = cfg.burn(k);
  double n = model::ion_spectral_density(ions, probe, cant);
};

const Setup& setup() {
  static const Setup s;
  return s;
}

}  // namespace

static void BM_VNumeric(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coupling::v_numeric(4e-13, s.burn, s.n, s.probe, s.ions.linewidth_rad_s));
  }
}
BENCHMARK(BM_VNumeric);

static void BM_VClosed(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coupling::v_closed(4e-13, s.burn, s.n, s.probe, s.ions.linewidth_rad_s));
  }
}
BENCHMARK(BM_VClosed);

static void BM_VLowT(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coupling::v_low_t(4e-13, s.burn, s.n, s.probe, s.ions.linewidth_rad_s));
  }
}
BENCHMARK(BM_VLowT);

static void BM_Dvdx0FiniteDifference(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupling::dvdx0(s.burn, s.n, s.probe,
                                             s.ions.linewidth_rad_s,
                                             coupling::Method::kNumeric));
  }
}
BENCHMARK(BM_Dvdx0FiniteDifference);

static void BM_EvaluateCouplingClosed(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coupling::evaluate_coupling(s.burn, s.n, s.probe, s.ions.linewidth_rad_s,
                                    s.mech, coupling::Method::kClosed));
  }
}
BENCHMARK(BM_EvaluateCouplingClosed);

static void BM_EvaluateCouplingNumeric(benchmark::State& state) {
  const auto& s = setup();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coupling::evaluate_coupling(s.burn, s.n, s.probe, s.ions.linewidth_rad_s,
                                    s.mech, coupling::Method::kNumeric));
  }
}
BENCHMARK(BM_EvaluateCouplingNumeric);

BENCHMARK_MAIN();
