#include "holeprobe/model.hpp"

#include <cmath>

#include "holeprobe/constants.hpp"

namespace holeprobe::model {

double thermal_occupancy(double omega_rad_s, double temperature_k) {
  if (temperature_k == 0.0) return 0.0;
  const double x = kHbar * omega_rad_s / (kBoltzmann * temperature_k);
  // expm1 keeps the high-T limit nbar ~ 1/x accurate; overflow of exp
  // at very low T collapses to 0 through the division
  return 1.0 / std::expm1(x);
}

double zero_point_amplitude(double mass_kg, double omega_rad_s) {
  return std::sqrt(kHbar / (2.0 * mass_kg * omega_rad_s));
}

double thermal_amplitude_classical(double mass_kg, double omega_rad_s,
                                   double temperature_k) {
  return std::sqrt(kBoltzmann * temperature_k /
                   (mass_kg * omega_rad_s * omega_rad_s));
}

double rms_amplitude_quantum(double mass_kg, double omega_rad_s,
                             double temperature_k) {
  const double nbar = thermal_occupancy(omega_rad_s, temperature_k);
  return zero_point_amplitude(mass_kg, omega_rad_s) * std::sqrt(2.0 * nbar + 1.0);
}

MechanicsDerived derive_mechanics(const CantileverSpec& c, const Environment& env) {
  c.validate();
  env.validate();
  MechanicsDerived d;
  d.omega_m_rad_s = kTwoPi * c.mode_frequency_hz;
  d.spring_n_per_m = c.effective_mass_kg * d.omega_m_rad_s * d.omega_m_rad_s;
  d.x_zpf_m = zero_point_amplitude(c.effective_mass_kg, d.omega_m_rad_s);
  d.x_thermal_m = thermal_amplitude_classical(c.effective_mass_kg, d.omega_m_rad_s,
                                              env.temperature_k);
  d.x_rms_m = rms_amplitude_quantum(c.effective_mass_kg, d.omega_m_rad_s,
                                    env.temperature_k);
  d.mean_occupancy = thermal_occupancy(d.omega_m_rad_s, env.temperature_k);
  return d;
}

double strain_coupling_k(const CantileverSpec& c, const IonEnsembleSpec& ions) {
  c.validate();
  ions.validate();
  return 3.0 * c.youngs_modulus_pa *
         std::abs(ions.strain_sensitivity_hz_per_pa) / (c.length_m * c.length_m);
}

double ion_spectral_density(const IonEnsembleSpec& ions, const ProbeSpec& beam,
                            const CantileverSpec& c) {
  ions.validate();
  beam.validate();
  c.validate();
  const double kGeomSlack = 1.0 + 1e-12;  // exact-fit footprints are legal
  if (beam.beam_extent_z_m > c.length_m * kGeomSlack) {
    throw BeamOverfillError(
        "beam extent along the cantilever axis exceeds its length");
  }
  const double extent_x = beam.cross_section_m2 / beam.beam_extent_z_m;
  if (extent_x > c.thickness_m * kGeomSlack) {
    throw BeamOverfillError(
        "beam footprint across the thickness exceeds the cantilever thickness");
  }
  return ions.ion_density_per_m3 * c.width_m * beam.beam_extent_z_m /
         ions.inhomogeneous_width_hz;
}

}  // namespace holeprobe::model
