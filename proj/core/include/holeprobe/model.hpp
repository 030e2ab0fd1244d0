#pragma once

// Derived mechanical and ensemble quantities.
//
// The flexural mode is treated as a single harmonic oscillator
// (m_eff, omega_M). Thermal statistics use the Bose occupancy of that
// mode; both the classical equipartition amplitude and the quantum rms
// amplitude x_zpf*sqrt(2*nbar+1) are exposed, the quantum form being the
// default everywhere an rms displacement is consumed.

#include "holeprobe/specs.hpp"

namespace holeprobe::model {

struct MechanicsDerived {
  double omega_m_rad_s = 0.0;       // 2*pi*nu_M
  double spring_n_per_m = 0.0;      // m_eff * omega_M^2
  double x_zpf_m = 0.0;             // sqrt(hbar / (2 m_eff omega_M))
  double x_thermal_m = 0.0;         // classical: sqrt(kB T / (m_eff omega_M^2))
  double x_rms_m = 0.0;             // quantum: x_zpf * sqrt(2 nbar + 1)
  double mean_occupancy = 0.0;      // nbar at the environment temperature
};

// Bose occupancy of a mode at omega (rad/s); exactly 0 at T = 0.
double thermal_occupancy(double omega_rad_s, double temperature_k);

double zero_point_amplitude(double mass_kg, double omega_rad_s);
double thermal_amplitude_classical(double mass_kg, double omega_rad_s,
                                   double temperature_k);
double rms_amplitude_quantum(double mass_kg, double omega_rad_s,
                             double temperature_k);

MechanicsDerived derive_mechanics(const CantileverSpec& c, const Environment& env);

// Surface-strain frequency-shift gradient k (Hz per m of tip displacement
// per m of fiber offset): k = 3 E |s| / L^2, from the surface stress of a
// uniform cantilever bent to tip displacement X.
double strain_coupling_k(const CantileverSpec& c, const IonEnsembleSpec& ions);

// Ions per unit fiber offset and unit detuning inside the beam,
// n = rho * w * b_z / Gamma_inh, units (Hz m)^-1. The footprint must fit
// inside the crystal: b_z <= L along the axis, A/b_z <= e across it.
double ion_spectral_density(const IonEnsembleSpec& ions, const ProbeSpec& beam,
                            const CantileverSpec& c);

}  // namespace holeprobe::model
