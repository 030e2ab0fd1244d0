// Detection and noise budgets for the hole-edge probe.
//
// The probe beam leaves the crystal carrying a mean phase (from the static
// displacement of the burned edges) and a phase modulation sideband (from
// the cantilever motion).  This module prices that signal against the three
// practical limits discussed alongside it:
//   * photon shot noise over a finite integration time,
//   * hole overburning, which caps the useful integration time at roughly
//     two absorption-emission cycles per edge ion, tau = 4*pi/Gamma,
//   * classical back-action baselines (radiation pressure) and stability
//     requirements (probe power and laser linewidth) that must be met for
//     the zero-point scale signal to survive.
//
// Phase amplitudes follow the quantum interpolation x_rms = x_zpf*sqrt(2
// nbar + 1): the root of the integrated displacement power spectral density
// including the vacuum contribution, so the sideband phase lands on the
// zero-point value at T = 0 instead of collapsing to zero.
//
// Shot noise uses the unit-SNR bound delta_phi = 1/sqrt(N_ph) with N_ph the
// photon number through the crystal during t_int.  Published sensitivity
// figures often carry an extra O(1) detection factor (homodyne gain,
// collection efficiency); reports therefore show measured-to-quoted ratios
// rather than silently absorbing such factors.

#pragma once

#include <optional>

#include "holeprobe/model.hpp"
#include "holeprobe/specs.hpp"

namespace holeprobe::coupling {
struct CouplingResult;
}

namespace holeprobe::observables {

// Photons per second through the crystal: R = P / (hbar * omega0).
double photon_rate(const ProbeSpec& probe);

// Time for an edge ion to scatter enough photons to risk re-burning the
// hole: tau = 4*pi / Gamma (Gamma in rad/s).  This caps t_int.
double overburn_time(double decay_rad_s);

// Shot-noise phase resolution 1/sqrt(R * t_int).  Infinite at zero power.
double shot_noise_phase(const ProbeSpec& probe, double t_int_s);

struct DetectionBudget {
  double photon_rate_per_s = 0.0;
  double overburn_time_s = 0.0;
  double integration_time_s = 0.0;  // defaults to overburn_time_s
  double shot_noise_phase_rad = 0.0;
};

// Budget for a probe run.  integration_time defaults to the overburn time,
// the longest interval the hole survives unrefreshed.
DetectionBudget detection_budget(const ProbeSpec& probe, double decay_rad_s,
                                 std::optional<double> integration_time_s = {});

struct SidebandReport {
  double thermal_phase_rad = 0.0;    // classical amplitude x_zpf*sqrt(2 nbar)
  double zeropoint_phase_rad = 0.0;  // vacuum amplitude x_zpf
  double total_phase_rad = 0.0;      // quantum amplitude x_zpf*sqrt(2 nbar + 1)
  // total/thermal - 1: the zero-point excess a thermometry readout must
  // resolve.  About 1/(4 nbar) deep in the thermal regime; +inf at T = 0
  // where the classical amplitude vanishes.
  double relative_excess = 0.0;
};

// Integrated sideband phase amplitudes phi = |dV/dX| * x * omega0 / P for
// the three canonical motional amplitudes x at temperature_k.
SidebandReport sideband_phases(double dvdx0_j_per_m, const ProbeSpec& probe,
                               const model::MechanicsDerived& mech,
                               double temperature_k);

// Static displacement from direct reflection of the same beam:
// (2 P / c) / (m_eff * omega_M^2).  The benchmark the dispersive force has
// to beat to count as a strong optomechanical handle.
double radiation_pressure_displacement(const ProbeSpec& probe,
                                       const model::MechanicsDerived& mech);

struct StabilityReport {
  // Fractional power stability keeping the static-displacement jitter below
  // the zero-point scale: x_zpf / X_disp.  Empty when X_disp = 0 (undriven
  // configuration; no requirement applies).
  std::optional<double> power_stability;
  // Frequency shift of the outermost edge ions for a zero-point tip motion,
  // k * (e/2) * x_zpf: the scale the probe laser linewidth must beat.
  double edge_zpf_shift_hz = 0.0;
  // "Substantially better than" the edge shift, reported as a tenth of it.
  double laser_linewidth_bound_hz = 0.0;
};

StabilityReport stability_requirements(const coupling::CouplingResult& result,
                                       const BurnSpec& burn,
                                       const model::MechanicsDerived& mech);

}  // namespace holeprobe::observables
