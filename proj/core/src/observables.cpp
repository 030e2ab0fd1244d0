#include "holeprobe/observables.hpp"

#include <cmath>

#include "holeprobe/constants.hpp"
#include "holeprobe/coupling.hpp"
#include "holeprobe/errors.hpp"

namespace holeprobe::observables {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw ValidationError(message);
}

// Beam checks shared by the rate-like quantities, deliberately looser than
// ProbeSpec::validate: zero power is a legitimate query here (rates and
// displacements vanish linearly), not a configuration mistake.
void check_beam(const ProbeSpec& probe) {
  require(std::isfinite(probe.power_w) && probe.power_w >= 0.0,
          "probe power must be finite and >= 0");
  require(std::isfinite(probe.wavelength_m) && probe.wavelength_m > 0.0,
          "probe wavelength must be finite and > 0");
}

}  // namespace

double photon_rate(const ProbeSpec& probe) {
  check_beam(probe);
  const double omega0 = coupling::carrier_angular_frequency(probe.wavelength_m);
  return probe.power_w / (kHbar * omega0);
}

double overburn_time(double decay_rad_s) {
  require(std::isfinite(decay_rad_s) && decay_rad_s > 0.0,
          "overburn time needs a positive decay rate");
  return 4.0 * kPi / decay_rad_s;
}

double shot_noise_phase(const ProbeSpec& probe, double t_int_s) {
  check_beam(probe);
  require(std::isfinite(t_int_s) && t_int_s > 0.0,
          "integration time must be finite and > 0");
  return 1.0 / std::sqrt(photon_rate(probe) * t_int_s);
}

DetectionBudget detection_budget(const ProbeSpec& probe, double decay_rad_s,
                                 std::optional<double> integration_time_s) {
  DetectionBudget budget;
  budget.photon_rate_per_s = photon_rate(probe);
  budget.overburn_time_s = overburn_time(decay_rad_s);
  budget.integration_time_s = integration_time_s.value_or(budget.overburn_time_s);
  budget.shot_noise_phase_rad = shot_noise_phase(probe, budget.integration_time_s);
  return budget;
}

SidebandReport sideband_phases(double dvdx0_j_per_m, const ProbeSpec& probe,
                               const model::MechanicsDerived& mech,
                               double temperature_k) {
  check_beam(probe);
  require(probe.power_w > 0.0, "sideband phases undefined at zero probe power");
  require(std::isfinite(dvdx0_j_per_m), "dV/dX must be finite");
  require(std::isfinite(temperature_k) && temperature_k >= 0.0,
          "temperature must be finite and >= 0");

  const double omega0 = coupling::carrier_angular_frequency(probe.wavelength_m);
  const double phase_per_meter = std::abs(dvdx0_j_per_m) * omega0 / probe.power_w;
  const double nbar = model::thermal_occupancy(mech.omega_m_rad_s, temperature_k);

  SidebandReport report;
  report.zeropoint_phase_rad = phase_per_meter * mech.x_zpf_m;
  report.thermal_phase_rad = phase_per_meter * mech.x_zpf_m * std::sqrt(2.0 * nbar);
  report.total_phase_rad = phase_per_meter * mech.x_zpf_m * std::sqrt(2.0 * nbar + 1.0);
  report.relative_excess = report.total_phase_rad / report.thermal_phase_rad - 1.0;
  return report;
}

double radiation_pressure_displacement(const ProbeSpec& probe,
                                       const model::MechanicsDerived& mech) {
  check_beam(probe);
  // Full reflection transfers 2 P / c of momentum flux; the static response
  // divides by the mode stiffness m_eff * omega_M^2.
  return (2.0 * probe.power_w / kSpeedOfLight) / mech.spring_n_per_m;
}

StabilityReport stability_requirements(const coupling::CouplingResult& result,
                                       const BurnSpec& burn,
                                       const model::MechanicsDerived& mech) {
  StabilityReport report;
  report.edge_zpf_shift_hz =
      burn.strain_hz_per_m2 * (0.5 * burn.thickness_m) * mech.x_zpf_m;
  report.laser_linewidth_bound_hz = report.edge_zpf_shift_hz / 10.0;
  if (result.x_disp_m != 0.0) {
    report.power_stability = mech.x_zpf_m / std::abs(result.x_disp_m);
  }
  return report;
}

}  // namespace holeprobe::observables
