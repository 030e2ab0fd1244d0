#pragma once

// Input parameter sets for the strain-coupled spectral-hole simulation.
//
// Geometry convention: the cantilever long axis is z, the probe beam
// traverses the width w along y, and x is the thickness coordinate
// measured from the neutral plane, x in [-e/2, e/2]. Surface strain maps
// tip displacement X to a per-ion frequency shift k*x*X (Hz), a magnetic
// bias gradient maps it to g*x*gradB (Hz). All detunings are in Hz;
// angular rates (linewidths, Rabi frequencies) are in rad/s.

#include <cmath>
#include <optional>

#include "holeprobe/errors.hpp"

namespace holeprobe {

// ------------------------------------------------------------------
// mechanical resonator
// ------------------------------------------------------------------
struct CantileverSpec {
  double length_m = 0.0;            // L, along z
  double thickness_m = 0.0;         // e, along x (bending direction)
  double width_m = 0.0;             // w, along y (beam traversal)
  double youngs_modulus_pa = 0.0;   // E
  double effective_mass_kg = 0.0;   // m_eff of the fundamental flexural mode
  double mode_frequency_hz = 0.0;   // nu_M

  void validate() const;
};

// ------------------------------------------------------------------
// dopant ensemble and its optical transition
// ------------------------------------------------------------------
struct IonEnsembleSpec {
  double wavelength_m = 0.0;               // lambda of the probed transition
  double linewidth_rad_s = 0.0;            // Gamma (homogeneous), rad/s
  double strain_sensitivity_hz_per_pa = 0.0;  // s, signed
  double zeeman_sensitivity_hz_per_t = 0.0;   // g > 0
  double ion_density_per_m3 = 0.0;         // rho (dopant number density)
  double inhomogeneous_width_hz = 1.4e9;   // Gamma_inh of the static line

  void validate() const;
};

// ------------------------------------------------------------------
// cryostat / operating point
// ------------------------------------------------------------------
struct Environment {
  double temperature_k = 3.0;
  double optical_power_limit_w = 5e-3;  // heat-load guard, ~10 mK/mW

  void validate() const;
};

// ------------------------------------------------------------------
// probe beam
// ------------------------------------------------------------------
struct ProbeSpec {
  double wavelength_m = 0.0;     // probe carrier (hole center)
  double power_w = 0.0;          // P
  double cross_section_m2 = 1e-10;  // A, beam footprint in the x-z plane
  double beam_extent_z_m = 0.0;  // b_z, footprint extent along the long axis

  double intensity_w_per_m2() const { return power_w / cross_section_m2; }

  void validate() const;
};

// ------------------------------------------------------------------
// functionalized burn protocol
// ------------------------------------------------------------------
// Two burn steps under opposite bias gradients produce, for every fiber x,
// a transparency window [ell_L(x), ell_R(x)] around the carrier:
//   ell_L(x) = -3*Delta + g*x*gradB - k*|x|*Xbar
//   ell_R(x) = +3*Delta - g*x*gradB + k*|x|*Xbar
// Validity of these expressions requires the step-1 condition
// Delta >= |g*(e/2)*gradB|; Xbar is the residual rms motion during the
// burn, which smears (widens) the edges.
struct BurnSpec {
  double center_frequency_hz = 0.0;   // nu_0, offset origin (may be 0)
  double half_width_hz = 0.0;         // Delta; burnt width per step is 4*Delta
  double gradient_t_per_m = 0.0;      // gradB_0 applied during the burn
  double smear_amplitude_m = 0.0;     // Xbar >= 0
  double zeeman_hz_per_t = 0.0;       // g, copied from the ensemble
  double strain_hz_per_m2 = 0.0;      // k, from strain_coupling_k
  double thickness_m = 0.0;           // e, from the cantilever

  void validate() const;
};

}  // namespace holeprobe
