// Shared worked-example fixtures: a 100 x 10 x 10 um^3 Y2SiO5 cantilever
// with 0.1% Eu3+ doping probed by 1 mW at 580 nm through a hole of
// half-width 1 MHz burnt under a 530 T/m gradient. Frozen reference
// numbers in the tests were cross-checked against these inputs with
// independent high-precision arithmetic.

#pragma once

#include <doctest.h>

#include "holeprobe/constants.hpp"
#include "holeprobe/model.hpp"
#include "holeprobe/specs.hpp"

// Strictly relative comparison. doctest's Approx defaults to scale = 1.0,
// which silently turns into an absolute test for quantities much smaller
// than 1 (J-scale potentials, pm-scale displacements); zeroing the scale
// keeps |lhs - rhs| < eps * max(|lhs|, |rhs|) honest at every magnitude.
inline doctest::Approx rel(double expect, double eps) {
  return doctest::Approx(expect).epsilon(eps).scale(0.0);
}

namespace fixtures {

inline holeprobe::CantileverSpec cantilever() {
  holeprobe::CantileverSpec c;
  c.length_m = 100e-6;
  c.thickness_m = 10e-6;
  c.width_m = 10e-6;
  c.youngs_modulus_pa = 135e9;
  c.effective_mass_kg = 1.1e-11;
  c.mode_frequency_hz = 890e3;
  return c;
}

inline holeprobe::IonEnsembleSpec ions() {
  holeprobe::IonEnsembleSpec s;
  s.wavelength_m = 580e-9;
  s.linewidth_rad_s = holeprobe::kTwoPi * 122.0;
  s.strain_sensitivity_hz_per_pa = -211.4;
  s.zeeman_sensitivity_hz_per_t = 3.8e7;  // 3.8 kHz/G
  s.ion_density_per_m3 = 1.87e25;
  return s;
}

inline holeprobe::Environment environment() {
  holeprobe::Environment e;
  e.temperature_k = 3.0;
  return e;
}

inline holeprobe::ProbeSpec probe() {
  holeprobe::ProbeSpec p;
  p.wavelength_m = 580e-9;
  p.power_w = 1e-3;
  p.cross_section_m2 = 1e-10;
  p.beam_extent_z_m = 1e-5;
  return p;
}

// k = 3 E |s| / L^2 ~ 8.56e21 Hz/m^2 for this geometry.
inline double strain_k() {
  return holeprobe::model::strain_coupling_k(cantilever(), ions());
}

inline holeprobe::BurnSpec burn() {
  holeprobe::BurnSpec b;
  b.center_frequency_hz = 0.0;
  b.half_width_hz = 1e6;
  b.gradient_t_per_m = 530.0;
  b.smear_amplitude_m = 0.0;
  b.zeeman_hz_per_t = ions().zeeman_sensitivity_hz_per_t;
  b.strain_hz_per_m2 = strain_k();
  b.thickness_m = cantilever().thickness_m;
  return b;
}

// n = rho * w * b_z / Gamma_inh ~ 1.34e6 (Hz m)^-1.
inline double spectral_density() {
  return holeprobe::model::ion_spectral_density(ions(), probe(), cantilever());
}

}  // namespace fixtures
