#include "holeprobe/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "holeprobe/constants.hpp"
#include "holeprobe/csv.hpp"
#include "holeprobe/errors.hpp"
#include "holeprobe/model.hpp"

namespace holeprobe::cli {

namespace {

struct Entry {
  const char* key;
  const char* unit;
  bool required;
  const char* doc;
  double ScenarioConfig::*field;                     // set for plain keys
  std::optional<double> ScenarioConfig::*opt_field;  // set for optional keys
  // Default for an absent key. Null for required keys and for optional
  // keys that legitimately stay unset. Runs after all explicit
  // assignments, in registry order, so it may read other fields.
  double (*make_default)(const ScenarioConfig&);
};

constexpr Entry kEntries[] = {
    {"cantilever.length_m", "m", true, "cantilever length L along the long axis",
     &ScenarioConfig::cantilever_length_m, nullptr, nullptr},
    {"cantilever.thickness_m", "m", true, "thickness e along the bending direction",
     &ScenarioConfig::cantilever_thickness_m, nullptr, nullptr},
    {"cantilever.width_m", "m", true, "width w along the beam traversal",
     &ScenarioConfig::cantilever_width_m, nullptr, nullptr},
    {"cantilever.youngs_modulus_pa", "Pa", true, "Young's modulus E",
     &ScenarioConfig::cantilever_youngs_modulus_pa, nullptr, nullptr},
    {"cantilever.effective_mass_kg", "kg", true, "effective mass of the flexural mode",
     &ScenarioConfig::cantilever_effective_mass_kg, nullptr, nullptr},
    {"cantilever.mode_frequency_hz", "Hz", true, "mechanical mode frequency nu_M",
     &ScenarioConfig::cantilever_mode_frequency_hz, nullptr, nullptr},
    {"ions.wavelength_m", "m", true, "optical transition wavelength",
     &ScenarioConfig::ions_wavelength_m, nullptr, nullptr},
    {"ions.linewidth_hz", "Hz", true, "natural linewidth Gamma/2pi",
     &ScenarioConfig::ions_linewidth_hz, nullptr, nullptr},
    {"ions.strain_sensitivity_hz_per_pa", "Hz/Pa", true,
     "frequency shift per unit stress, signed",
     &ScenarioConfig::ions_strain_sensitivity_hz_per_pa, nullptr, nullptr},
    {"ions.zeeman_sensitivity_hz_per_t", "Hz/T", true, "linear Zeeman sensitivity g",
     &ScenarioConfig::ions_zeeman_sensitivity_hz_per_t, nullptr, nullptr},
    {"ions.density_per_m3", "1/m^3", true, "dopant number density",
     &ScenarioConfig::ions_density_per_m3, nullptr, nullptr},
    {"ions.inhomogeneous_width_hz", "Hz", false,
     "inhomogeneous linewidth of the static distribution",
     &ScenarioConfig::ions_inhomogeneous_width_hz, nullptr,
     [](const ScenarioConfig& c) { return c.ions_inhomogeneous_width_hz; }},
    {"environment.temperature_k", "K", true, "operating temperature",
     &ScenarioConfig::environment_temperature_k, nullptr, nullptr},
    {"environment.optical_power_limit_w", "W", false,
     "heat-load guard on the probe power (~10 mK/mW cryocooler budget)",
     &ScenarioConfig::environment_optical_power_limit_w, nullptr,
     [](const ScenarioConfig& c) { return c.environment_optical_power_limit_w; }},
    {"burn.center_frequency_hz", "Hz", false, "hole center nu_0 as detuning origin",
     &ScenarioConfig::burn_center_frequency_hz, nullptr,
     [](const ScenarioConfig& c) { return c.burn_center_frequency_hz; }},
    {"burn.delta_hz", "Hz", true, "hole half-width Delta (full hole spans 6*Delta)",
     &ScenarioConfig::burn_delta_hz, nullptr, nullptr},
    {"burn.gradient_t_per_m", "T/m", true, "bias magnetic gradient during the burn",
     &ScenarioConfig::burn_gradient_t_per_m, nullptr, nullptr},
    {"burn.smear_amplitude_m", "m", false,
     "rms cantilever motion during the burn (edge smearing)",
     &ScenarioConfig::burn_smear_amplitude_m, nullptr,
     [](const ScenarioConfig& c) { return c.burn_smear_amplitude_m; }},
    {"probe.power_w", "W", true, "probe beam power",
     &ScenarioConfig::probe_power_w, nullptr, nullptr},
    {"probe.wavelength_m", "m", false, "probe wavelength; defaults to ions.wavelength_m",
     &ScenarioConfig::probe_wavelength_m, nullptr,
     [](const ScenarioConfig& c) { return c.ions_wavelength_m; }},
    {"probe.cross_section_m2", "m^2", false, "beam cross-section A",
     &ScenarioConfig::probe_cross_section_m2, nullptr,
     [](const ScenarioConfig& c) { return c.probe_cross_section_m2; }},
    {"probe.beam_extent_z_m", "m", false,
     "beam footprint along the cantilever axis; defaults to sqrt(A)",
     &ScenarioConfig::probe_beam_extent_z_m, nullptr,
     [](const ScenarioConfig& c) { return std::sqrt(c.probe_cross_section_m2); }},
    {"coupling.probe_displacement_m", "m", false,
     "tip displacement at which V is evaluated; unset means the "
     "self-consistent static displacement",
     nullptr, &ScenarioConfig::coupling_probe_displacement_m, nullptr},
    {"numerics.quadrature_rel_tol", "1", false,
     "relative tolerance of the interaction-integral quadrature",
     &ScenarioConfig::numerics_quadrature_rel_tol, nullptr,
     [](const ScenarioConfig& c) { return c.numerics_quadrature_rel_tol; }},
};

const Entry* find_entry(const std::string& key) {
  for (const Entry& e : kEntries) {
    if (key == e.key) return &e;
  }
  return nullptr;
}

void assign(ScenarioConfig& cfg, const Entry& e, double value) {
  if (e.field) {
    cfg.*(e.field) = value;
  } else {
    cfg.*(e.opt_field) = value;
  }
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(key, "not a number: '" + text + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(key, "value must be finite");
  }
  return value;
}

}  // namespace

CantileverSpec ScenarioConfig::cantilever() const {
  CantileverSpec c;
  c.length_m = cantilever_length_m;
  c.thickness_m = cantilever_thickness_m;
  c.width_m = cantilever_width_m;
  c.youngs_modulus_pa = cantilever_youngs_modulus_pa;
  c.effective_mass_kg = cantilever_effective_mass_kg;
  c.mode_frequency_hz = cantilever_mode_frequency_hz;
  return c;
}

IonEnsembleSpec ScenarioConfig::ions() const {
  IonEnsembleSpec s;
  s.wavelength_m = ions_wavelength_m;
  s.linewidth_rad_s = kTwoPi * ions_linewidth_hz;
  s.strain_sensitivity_hz_per_pa = ions_strain_sensitivity_hz_per_pa;
  s.zeeman_sensitivity_hz_per_t = ions_zeeman_sensitivity_hz_per_t;
  s.ion_density_per_m3 = ions_density_per_m3;
  s.inhomogeneous_width_hz = ions_inhomogeneous_width_hz;
  return s;
}

Environment ScenarioConfig::environment() const {
  Environment e;
  e.temperature_k = environment_temperature_k;
  e.optical_power_limit_w = environment_optical_power_limit_w;
  return e;
}

ProbeSpec ScenarioConfig::probe() const {
  ProbeSpec p;
  p.wavelength_m = probe_wavelength_m;
  p.power_w = probe_power_w;
  p.cross_section_m2 = probe_cross_section_m2;
  p.beam_extent_z_m = probe_beam_extent_z_m;
  return p;
}

BurnSpec ScenarioConfig::burn(double strain_k_hz_per_m2) const {
  BurnSpec b;
  b.center_frequency_hz = burn_center_frequency_hz;
  b.half_width_hz = burn_delta_hz;
  b.gradient_t_per_m = burn_gradient_t_per_m;
  b.smear_amplitude_m = burn_smear_amplitude_m;
  b.zeeman_hz_per_t = ions_zeeman_sensitivity_hz_per_t;
  b.strain_hz_per_m2 = strain_k_hz_per_m2;
  b.thickness_m = cantilever_thickness_m;
  return b;
}

void ScenarioConfig::validate() const {
  cantilever().validate();
  ions().validate();
  environment().validate();
  probe().validate();
  burn(model::strain_coupling_k(cantilever(), ions())).validate();
  if (coupling_probe_displacement_m &&
      !std::isfinite(*coupling_probe_displacement_m)) {
    throw ValidationError("coupling.probe_displacement_m must be finite");
  }
  if (!(numerics_quadrature_rel_tol > 0.0) || numerics_quadrature_rel_tol > 1e-2) {
    throw ValidationError("numerics.quadrature_rel_tol must be in (0, 1e-2]");
  }
}

const std::vector<KeyInfo>& config_keys() {
  static const std::vector<KeyInfo> keys = [] {
    std::vector<KeyInfo> out;
    for (const Entry& e : kEntries) {
      out.push_back({e.key, e.unit, e.required, e.doc});
    }
    return out;
  }();
  return keys;
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::set<std::string> assigned;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("line " + std::to_string(lineno),
                       "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value_text = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ParseError("line " + std::to_string(lineno), "empty key");
    }
    const Entry* entry = find_entry(key);
    if (!entry) throw UnknownParameterError(key);
    if (!assigned.insert(key).second) {
      throw ParseError(key, "duplicate key (line " + std::to_string(lineno) + ")");
    }
    if (value_text.empty()) throw ParseError(key, "empty value");
    assign(cfg, *entry, parse_number(key, value_text));
  }

  for (const Entry& e : kEntries) {
    if (assigned.count(e.key)) continue;
    if (e.required) throw ParseError(e.key, "required key missing");
    if (e.make_default) {
      assign(cfg, e, e.make_default(cfg));
    }
    cfg.defaulted_keys.push_back(e.key);
  }

  cfg.validate();
  return cfg;
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::string out;
  std::string section;
  for (const Entry& e : kEntries) {
    const std::string key(e.key);
    const std::string this_section = key.substr(0, key.find('.'));
    if (this_section != section) {
      if (!section.empty()) out += "\n";
      section = this_section;
    }
    if (e.field) {
      out += key + " = " + format_double(cfg.*(e.field)) + "\n";
    } else if (cfg.*(e.opt_field)) {
      out += key + " = " + format_double(*(cfg.*(e.opt_field))) + "\n";
    }
  }
  return out;
}

std::optional<double> get_parameter(const ScenarioConfig& cfg, const std::string& key) {
  const Entry* entry = find_entry(key);
  if (!entry) throw UnknownParameterError(key);
  if (entry->field) return cfg.*(entry->field);
  return cfg.*(entry->opt_field);
}

void set_parameter(ScenarioConfig& cfg, const std::string& key, double value) {
  const Entry* entry = find_entry(key);
  if (!entry) throw UnknownParameterError(key);
  if (!std::isfinite(value)) throw ValidationError(key + " must be finite");
  assign(cfg, *entry, value);
}

const std::string& default_config_text() {
  static const std::string text = R"cfg(# Worked example: a Y2SiO5 cantilever with 0.1% Eu3+ doping, probed at the
# center of a functionalized 6 MHz spectral hole by a 1 mW beam.
# All values SI; the unit is named in each key suffix.

cantilever.length_m = 100e-6
cantilever.thickness_m = 10e-6
cantilever.width_m = 10e-6
cantilever.youngs_modulus_pa = 135e9
cantilever.effective_mass_kg = 1.1e-11
cantilever.mode_frequency_hz = 890e3

ions.wavelength_m = 580e-9
ions.linewidth_hz = 122            # natural linewidth Gamma/2pi
ions.strain_sensitivity_hz_per_pa = -211.4
ions.zeeman_sensitivity_hz_per_t = 3.8e7   # 3.8 kHz/G
ions.density_per_m3 = 1.87e25      # 0.1% of the Y sites
ions.inhomogeneous_width_hz = 1.4e9

environment.temperature_k = 3
environment.optical_power_limit_w = 5e-3

burn.delta_hz = 1e6                # hole spans 6 MHz
burn.gradient_t_per_m = 530
burn.smear_amplitude_m = 0         # burn modeled at negligible Brownian motion

probe.power_w = 1e-3
probe.cross_section_m2 = 1e-10     # 100 um^2 footprint
)cfg";
  return text;
}

ScenarioConfig default_config() { return parse_config(default_config_text()); }

}  // namespace holeprobe::cli
