// Flat key=value configuration for full scenario runs.
//
// Format: one `section.key_with_unit_suffix = number` per line, `#` starts
// a comment, blank lines ignored. Every key is SI with the unit named in
// the suffix. Unknown keys are errors (a typo must never silently fall
// back to a default); duplicate keys are errors; missing required keys are
// errors. Missing optional keys take their documented defaults and are
// recorded in defaulted_keys so reports can flag them.
//
// The stored values are the literal config numbers; physics structs are
// assembled on demand (e.g. the linewidth is configured as the
// conventional Gamma/2pi in Hz and converted to rad/s during assembly).
// serialize_config therefore reproduces parsed values byte for byte.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holeprobe/specs.hpp"

namespace holeprobe::cli {

struct ScenarioConfig {
  // cantilever
  double cantilever_length_m = 0.0;
  double cantilever_thickness_m = 0.0;
  double cantilever_width_m = 0.0;
  double cantilever_youngs_modulus_pa = 0.0;
  double cantilever_effective_mass_kg = 0.0;
  double cantilever_mode_frequency_hz = 0.0;
  // ions
  double ions_wavelength_m = 0.0;
  double ions_linewidth_hz = 0.0;  // natural linewidth Gamma / 2pi
  double ions_strain_sensitivity_hz_per_pa = 0.0;
  double ions_zeeman_sensitivity_hz_per_t = 0.0;
  double ions_density_per_m3 = 0.0;
  double ions_inhomogeneous_width_hz = 1.4e9;
  // environment
  double environment_temperature_k = 0.0;
  double environment_optical_power_limit_w = 5e-3;
  // burn protocol
  double burn_center_frequency_hz = 0.0;
  double burn_delta_hz = 0.0;  // hole half-width Delta; full hole is 6*Delta
  double burn_gradient_t_per_m = 0.0;
  double burn_smear_amplitude_m = 0.0;
  // probe beam
  double probe_power_w = 0.0;
  double probe_wavelength_m = 0.0;      // defaults to ions.wavelength_m
  double probe_cross_section_m2 = 1e-10;
  double probe_beam_extent_z_m = 0.0;   // defaults to sqrt(cross_section)
  // coupling evaluation point; absent means the self-consistent X_disp
  std::optional<double> coupling_probe_displacement_m;
  // numerics
  double numerics_quadrature_rel_tol = 1e-10;

  // keys that were not present in the parsed text and took defaults
  std::vector<std::string> defaulted_keys;

  CantileverSpec cantilever() const;
  IonEnsembleSpec ions() const;
  Environment environment() const;
  ProbeSpec probe() const;
  // Burn spec needs the derived strain constant k = 3 E |s| / L^2.
  BurnSpec burn(double strain_k_hz_per_m2) const;

  // Assembles every spec and validates it; throws ValidationError on the
  // first breach. parse_config calls this, so a returned config is usable.
  void validate() const;
};

struct KeyInfo {
  std::string key;
  std::string unit;
  bool required = false;
  std::string doc;
};

// Registry of all accepted keys in canonical (serialization) order.
const std::vector<KeyInfo>& config_keys();

// Parses and fully validates. Throws ParseError (bad line, bad number,
// duplicate, missing required key), UnknownParameterError, or
// ValidationError; all are ConfigError for exit-code purposes.
ScenarioConfig parse_config(const std::string& text);

// Canonical text: every key in registry order, defaults materialized,
// unset optional keys omitted. serialize(parse(s)) is idempotent.
std::string serialize_config(const ScenarioConfig& cfg);

// Point lookup/update by key path (used by sweeps). Lookup is empty for an
// unset optional key. Both throw UnknownParameterError for keys outside
// the registry. set_parameter does not re-validate; sweeps validate per row.
std::optional<double> get_parameter(const ScenarioConfig& cfg, const std::string& key);
void set_parameter(ScenarioConfig& cfg, const std::string& key, double value);

// Bundled worked example (the configuration every acceptance figure refers
// to). default_config() == parse_config(default_config_text()).
const std::string& default_config_text();
ScenarioConfig default_config();

}  // namespace holeprobe::cli
