// Flat key=value scenario configuration: parsing, defaulting, strict key
// policy, round-trip serialization, and point parameter access.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "holeprobe/config.hpp"
#include "holeprobe/errors.hpp"

using namespace holeprobe;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bundled worked-example text parses to the documented values") {
  const auto cfg = cli::parse_config(cli::default_config_text());

  CHECK(cfg.cantilever_length_m == 100e-6);
  CHECK(cfg.cantilever_thickness_m == 10e-6);
  CHECK(cfg.cantilever_width_m == 10e-6);
  CHECK(cfg.cantilever_youngs_modulus_pa == 135e9);
  CHECK(cfg.cantilever_effective_mass_kg == 1.1e-11);
  CHECK(cfg.cantilever_mode_frequency_hz == 890e3);
  CHECK(cfg.ions_wavelength_m == 580e-9);
  CHECK(cfg.ions_linewidth_hz == 122.0);
  CHECK(cfg.ions_strain_sensitivity_hz_per_pa == -211.4);
  CHECK(cfg.ions_zeeman_sensitivity_hz_per_t == 3.8e7);
  CHECK(cfg.ions_density_per_m3 == 1.87e25);
  CHECK(cfg.ions_inhomogeneous_width_hz == 1.4e9);
  CHECK(cfg.environment_temperature_k == 3.0);
  CHECK(cfg.environment_optical_power_limit_w == 5e-3);
  CHECK(cfg.burn_center_frequency_hz == 0.0);
  CHECK(cfg.burn_delta_hz == 1e6);
  CHECK(cfg.burn_gradient_t_per_m == 530.0);
  CHECK(cfg.burn_smear_amplitude_m == 0.0);
  CHECK(cfg.probe_power_w == 1e-3);
  CHECK(cfg.probe_cross_section_m2 == 1e-10);
  CHECK(cfg.numerics_quadrature_rel_tol == 1e-10);
  CHECK_FALSE(cfg.coupling_probe_displacement_m.has_value());

  // inherited defaults
  CHECK(cfg.probe_wavelength_m == cfg.ions_wavelength_m);
  CHECK(cfg.probe_beam_extent_z_m == rel(1e-5, 1e-12));  // sqrt(A)

  const std::vector<std::string> expected_defaults = {
      "burn.center_frequency_hz", "probe.wavelength_m", "probe.beam_extent_z_m",
      "coupling.probe_displacement_m", "numerics.quadrature_rel_tol"};
  CHECK(cfg.defaulted_keys == expected_defaults);
}

TEST_CASE("default_config() is the parsed bundled text") {
  const auto a = cli::default_config();
  const auto b = cli::parse_config(cli::default_config_text());
  CHECK(a.burn_delta_hz == b.burn_delta_hz);
  CHECK(a.probe_beam_extent_z_m == b.probe_beam_extent_z_m);
  CHECK(a.defaulted_keys == b.defaulted_keys);
}

TEST_CASE("serialization round-trips byte for byte") {
  const auto cfg = cli::parse_config(cli::default_config_text());
  const std::string s1 = cli::serialize_config(cfg);
  const auto cfg2 = cli::parse_config(s1);
  const std::string s2 = cli::serialize_config(cfg2);
  CHECK(s1 == s2);

  // serialization materializes computed defaults, so a reparse only falls
  // back for optional keys with no value at all
  CHECK(cfg2.defaulted_keys ==
        std::vector<std::string>{"coupling.probe_displacement_m"});
  CHECK(cfg2.probe_wavelength_m == cfg.probe_wavelength_m);
  CHECK(cfg2.probe_beam_extent_z_m == cfg.probe_beam_extent_z_m);

  // a set optional key survives the round trip
  auto cfg3 = cfg;
  cfg3.coupling_probe_displacement_m = 4e-13;
  const auto cfg4 = cli::parse_config(cli::serialize_config(cfg3));
  REQUIRE(cfg4.coupling_probe_displacement_m.has_value());
  CHECK(*cfg4.coupling_probe_displacement_m == 4e-13);
  CHECK(cfg4.defaulted_keys.empty());
}

TEST_CASE("the repository example file matches the embedded text") {
  CHECK(slurp(HOLEPROBE_REPO_CONFIG) == cli::default_config_text());
}

TEST_CASE("spec assembly applies the unit conventions") {
  const auto cfg = cli::default_config();
  const auto ions = cfg.ions();
  CHECK(ions.linewidth_rad_s == rel(kTwoPi * 122.0, 1e-15));  // Gamma/2pi in, rad/s out
  CHECK(ions.wavelength_m == 580e-9);

  const auto probe = cfg.probe();
  CHECK(probe.power_w == 1e-3);
  CHECK(probe.intensity_w_per_m2() == rel(1e7, 1e-12));

  const double k = fixtures::strain_k();
  const auto burn = cfg.burn(k);
  CHECK(burn.strain_hz_per_m2 == k);
  CHECK(burn.half_width_hz == 1e6);
  CHECK(burn.zeeman_hz_per_t == 3.8e7);
  CHECK(burn.thickness_m == cfg.cantilever_thickness_m);
}

TEST_CASE("parse rejections") {
  const std::string base(cli::default_config_text());

  CHECK_THROWS_AS(cli::parse_config(base + "burn.delta_hz = 2e6\n"), ParseError);
  CHECK_THROWS_AS(cli::parse_config(base + "burn.deltah_hz = 2e6\n"),
                  UnknownParameterError);
  CHECK_THROWS_AS(cli::parse_config(base + "this is not a key value line\n"),
                  ParseError);
  CHECK_THROWS_AS(cli::parse_config(base + "probe.beam_extent_z_m = tiny\n"),
                  ParseError);
  CHECK_THROWS_AS(cli::parse_config(base + "probe.beam_extent_z_m =\n"), ParseError);
  CHECK_THROWS_AS(cli::parse_config("cantilever.length_m = 100e-6\n"), ParseError);
  CHECK_THROWS_AS(cli::parse_config(""), ParseError);

  // every rejection above is a ConfigError for exit-code purposes
  CHECK_THROWS_AS(cli::parse_config(base + "bad line\n"), ConfigError);
}

TEST_CASE("validation failures surface from parse_config") {
  std::string text(cli::default_config_text());
  auto replace = [&text](const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), to);
  };

  SUBCASE("negative hole width") {
    replace("burn.delta_hz = 1e6", "burn.delta_hz = -1e6");
    CHECK_THROWS_AS(cli::parse_config(text), ValidationError);
  }
  SUBCASE("gradient too steep for the burn protocol") {
    replace("burn.gradient_t_per_m = 530", "burn.gradient_t_per_m = 1e6");
    CHECK_THROWS_AS(cli::parse_config(text), ValidationError);
  }
  SUBCASE("quadrature tolerance out of range") {
    CHECK_THROWS_AS(
        cli::parse_config(text + "numerics.quadrature_rel_tol = 0.1\n"),
        ValidationError);
  }
  SUBCASE("zero temperature is legal") {
    replace("environment.temperature_k = 3", "environment.temperature_k = 0");
    CHECK_NOTHROW(cli::parse_config(text));
  }
}

TEST_CASE("point parameter access") {
  auto cfg = cli::default_config();

  REQUIRE(cli::get_parameter(cfg, "burn.delta_hz").has_value());
  CHECK(*cli::get_parameter(cfg, "burn.delta_hz") == 1e6);
  CHECK_FALSE(cli::get_parameter(cfg, "coupling.probe_displacement_m").has_value());

  cli::set_parameter(cfg, "coupling.probe_displacement_m", 4e-13);
  REQUIRE(cli::get_parameter(cfg, "coupling.probe_displacement_m").has_value());
  CHECK(*cli::get_parameter(cfg, "coupling.probe_displacement_m") == 4e-13);

  cli::set_parameter(cfg, "probe.power_w", 2e-3);
  CHECK(cfg.probe_power_w == 2e-3);

  CHECK_THROWS_AS(cli::get_parameter(cfg, "probe.powerw"), UnknownParameterError);
  CHECK_THROWS_AS(cli::set_parameter(cfg, "probe.powerw", 1.0), UnknownParameterError);
  CHECK_THROWS_AS(
      cli::set_parameter(cfg, "probe.power_w", std::numeric_limits<double>::infinity()),
      ValidationError);
}

TEST_CASE("key registry covers the config struct and orders sections") {
  const auto& keys = cli::config_keys();
  CHECK(keys.size() == 24);
  int required = 0;
  for (const auto& k : keys) required += k.required ? 1 : 0;
  CHECK(required == 15);
  CHECK(keys.front().key == "cantilever.length_m");
  for (const auto& k : keys) {
    CHECK_FALSE(k.unit.empty());
    CHECK_FALSE(k.doc.empty());
  }
}
