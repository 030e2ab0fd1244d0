// Detection budgets, sideband phase amplitudes and stability requirements
// for the worked-example cantilever, pinned against hand-audited values and
// against the scaling laws they must obey.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "holeprobe/constants.hpp"
#include "holeprobe/coupling.hpp"
#include "holeprobe/errors.hpp"
#include "holeprobe/model.hpp"
#include "holeprobe/observables.hpp"

using namespace holeprobe;

namespace {

model::MechanicsDerived mech() {
  return model::derive_mechanics(fixtures::cantilever(), fixtures::environment());
}

// dV/dX at X = 0 for the worked example, closed form (audited elsewhere;
// here it is only the input scale for the phase amplitudes)
constexpr double kDvdx0 = -1.3483923085953837e-10;

}  // namespace

TEST_CASE("photon rate and overburn time for the worked example") {
  CHECK(observables::photon_rate(fixtures::probe()) ==
        rel(2.9197876109637815e+15, 1e-12));
  // two absorption-emission cycles per edge ion: 4*pi / (2*pi*122 Hz)
  CHECK(observables::overburn_time(fixtures::ions().linewidth_rad_s) ==
        rel(0.01639344262295082, 1e-12));
}

TEST_CASE("shot noise at the overburn cap and at a short gate") {
  const auto budget =
      observables::detection_budget(fixtures::probe(), fixtures::ions().linewidth_rad_s);
  CHECK(budget.integration_time_s == budget.overburn_time_s);
  CHECK(budget.photon_rate_per_s == observables::photon_rate(fixtures::probe()));
  CHECK(budget.shot_noise_phase_rad ==
        observables::shot_noise_phase(fixtures::probe(), budget.integration_time_s));
  CHECK(budget.shot_noise_phase_rad == rel(1.4454041149023144e-07, 1e-12));

  const auto gated =
      observables::detection_budget(fixtures::probe(), fixtures::ions().linewidth_rad_s, 25e-6);
  CHECK(gated.integration_time_s == 25e-6);
  CHECK(gated.shot_noise_phase_rad == rel(3.701300662285228e-06, 1e-12));
}

TEST_CASE("shot noise scales as 1/sqrt(P * t): the product is invariant") {
  auto probe = fixtures::probe();
  const double ref = observables::shot_noise_phase(probe, 1e-5) * std::sqrt(probe.power_w * 1e-5);
  for (double p : {1e-5, 1e-3, 0.1}) {
    for (double t : {1e-6, 25e-6, 0.0164}) {
      probe.power_w = p;
      const double c = observables::shot_noise_phase(probe, t) * std::sqrt(p * t);
      CHECK(c == rel(ref, 1e-12));
    }
  }
}

TEST_CASE("sideband phases at 3 K: frozen values and the quadrature identity") {
  const auto r = observables::sideband_phases(kDvdx0, fixtures::probe(), mech(), 3.0);
  CHECK(r.zeropoint_phase_rad == rel(4.054437842924498e-07, 1e-12));
  CHECK(r.thermal_phase_rad == rel(0.00015195792324596924, 1e-12));
  CHECK(r.total_phase_rad == rel(1.51958464134e-4, 1e-9));

  // total^2 = thermal^2 + zeropoint^2 because x_rms^2 = x_th^2 + x_zpf^2
  const double quad = std::sqrt(r.thermal_phase_rad * r.thermal_phase_rad +
                                r.zeropoint_phase_rad * r.zeropoint_phase_rad);
  CHECK(r.total_phase_rad == rel(quad, 1e-12));
  CHECK(r.relative_excess == r.total_phase_rad / r.thermal_phase_rad - 1.0);

  // the phase amplitudes are odd-insensitive to the sign of dV/dX
  const auto flipped = observables::sideband_phases(-kDvdx0, fixtures::probe(), mech(), 3.0);
  CHECK(flipped.total_phase_rad == r.total_phase_rad);
}

TEST_CASE("zero-point excess: invisible at 3 K, resolvable at 30 mK") {
  const auto cold = observables::sideband_phases(kDvdx0, fixtures::probe(), mech(), 0.03);
  CHECK(cold.relative_excess == rel(3.56133957724e-4, 1e-9));

  const auto warm = observables::sideband_phases(kDvdx0, fixtures::probe(), mech(), 3.0);
  // ~1/(4 nbar) at 3 K with nbar = 7e4: buried below 1e-5
  CHECK(warm.relative_excess < 1e-5);
  CHECK(warm.relative_excess > 0.0);
  CHECK(cold.relative_excess == rel(1.0 / (4.0 * 701.858067056), 3e-3));
}

TEST_CASE("at T = 0 only the zero-point sideband survives") {
  const auto r = observables::sideband_phases(kDvdx0, fixtures::probe(), mech(), 0.0);
  CHECK(r.thermal_phase_rad == 0.0);
  CHECK(r.total_phase_rad == r.zeropoint_phase_rad);
  CHECK(std::isinf(r.relative_excess));
  CHECK(r.relative_excess > 0.0);
}

TEST_CASE("radiation-pressure displacement of the bare cantilever") {
  CHECK(observables::radiation_pressure_displacement(fixtures::probe(), mech()) ==
        rel(1.9394422734768456e-14, 1e-12));
  // linear in power
  auto half = fixtures::probe();
  half.power_w *= 0.5;
  CHECK(observables::radiation_pressure_displacement(half, mech()) ==
        0.5 * observables::radiation_pressure_displacement(fixtures::probe(), mech()));
}

TEST_CASE("stability requirements for the self-consistent operating point") {
  const auto result = coupling::evaluate_coupling(
      fixtures::burn(), fixtures::spectral_density(), fixtures::probe(),
      fixtures::ions().linewidth_rad_s, mech(), coupling::Method::kClosed);
  const auto s = observables::stability_requirements(result, fixtures::burn(), mech());
  REQUIRE(s.power_stability.has_value());
  CHECK(*s.power_stability == rel(0.00236188077457816, 1e-12));
  CHECK(s.edge_zpf_shift_hz == rel(39.6343566455441, 1e-12));
  CHECK(s.laser_linewidth_bound_hz == s.edge_zpf_shift_hz / 10.0);
}

TEST_CASE("no displacement, no power-stability requirement") {
  coupling::CouplingResult result;  // x_disp_m = 0
  const auto s = observables::stability_requirements(result, fixtures::burn(), mech());
  CHECK_FALSE(s.power_stability.has_value());
  CHECK(s.edge_zpf_shift_hz > 0.0);
}

TEST_CASE("input validation") {
  auto probe = fixtures::probe();

  CHECK_THROWS_AS(observables::overburn_time(0.0), ValidationError);
  CHECK_THROWS_AS(observables::overburn_time(-1.0), ValidationError);

  CHECK_THROWS_AS(observables::shot_noise_phase(probe, 0.0), ValidationError);
  CHECK_THROWS_AS(observables::shot_noise_phase(probe, -1e-3), ValidationError);

  probe.power_w = -1e-3;
  CHECK_THROWS_AS(observables::photon_rate(probe), ValidationError);

  probe.power_w = 0.0;  // legal for rates, not for phase amplitudes
  CHECK(observables::photon_rate(probe) == 0.0);
  CHECK_THROWS_AS(observables::sideband_phases(kDvdx0, probe, mech(), 3.0),
                  ValidationError);

  probe = fixtures::probe();
  CHECK_THROWS_AS(observables::sideband_phases(kDvdx0, probe, mech(), -0.1),
                  ValidationError);
  CHECK_THROWS_AS(
      observables::sideband_phases(std::numeric_limits<double>::quiet_NaN(), probe,
                                   mech(), 3.0),
      ValidationError);
}
