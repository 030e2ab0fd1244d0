#include "holeprobe/specs.hpp"

#include <cmath>
#include <string>

namespace holeprobe {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }
bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void CantileverSpec::validate() const {
  require(finite_pos(length_m), "cantilever.length_m must be > 0");
  require(finite_pos(thickness_m), "cantilever.thickness_m must be > 0");
  require(finite_pos(width_m), "cantilever.width_m must be > 0");
  require(thickness_m <= length_m,
          "cantilever.thickness_m must not exceed cantilever.length_m");
  require(finite_pos(youngs_modulus_pa), "cantilever.youngs_modulus_pa must be > 0");
  require(finite_pos(effective_mass_kg), "cantilever.effective_mass_kg must be > 0");
  require(finite_pos(mode_frequency_hz), "cantilever.mode_frequency_hz must be > 0");
}

void IonEnsembleSpec::validate() const {
  require(finite_pos(wavelength_m), "ions.wavelength_m must be > 0");
  require(finite_pos(linewidth_rad_s), "ions.linewidth_rad_per_s must be > 0");
  require(std::isfinite(strain_sensitivity_hz_per_pa),
          "ions.strain_sensitivity_hz_per_pa must be finite");
  require(finite_pos(zeeman_sensitivity_hz_per_t),
          "ions.zeeman_sensitivity_hz_per_t must be > 0");
  require(finite_nonneg(ion_density_per_m3), "ions.ion_density_per_m3 must be >= 0");
  require(finite_pos(inhomogeneous_width_hz),
          "ions.inhomogeneous_width_hz must be > 0");
}

void Environment::validate() const {
  require(finite_nonneg(temperature_k), "environment.temperature_k must be >= 0");
  require(finite_pos(optical_power_limit_w),
          "environment.optical_power_limit_w must be > 0");
}

void ProbeSpec::validate() const {
  require(finite_pos(wavelength_m), "probe.wavelength_m must be > 0");
  require(finite_pos(power_w), "probe.power_w must be > 0");
  require(finite_pos(cross_section_m2), "probe.cross_section_m2 must be > 0");
  require(finite_pos(beam_extent_z_m), "probe.beam_extent_z_m must be > 0");
}

void BurnSpec::validate() const {
  require(std::isfinite(center_frequency_hz),
          "burn.center_frequency_hz must be finite");
  require(finite_pos(half_width_hz), "burn.half_width_hz must be > 0");
  require(std::isfinite(gradient_t_per_m), "burn.bias_gradient_t_per_m must be finite");
  require(finite_nonneg(smear_amplitude_m), "burn.smear_amplitude_m must be >= 0");
  require(finite_pos(zeeman_hz_per_t), "burn spec: zeeman sensitivity must be > 0");
  require(finite_nonneg(strain_hz_per_m2), "burn spec: strain coupling must be >= 0");
  require(finite_pos(thickness_m), "burn spec: thickness must be > 0");
  // step-1 scan must cover the gradient-shifted line at the surface fiber;
  // beyond this the edge expressions change branch
  const double edge_shift = std::abs(zeeman_hz_per_t * (thickness_m / 2.0) *
                                     gradient_t_per_m);
  require(edge_shift <= half_width_hz,
          "burn protocol requires Delta >= |g*(e/2)*gradB| "
          "(scan width vs gradient shift at the surface)");
}

}  // namespace holeprobe
