#include "holeprobe/report.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ctime>
#include <json.hpp>

#include "holeprobe/csv.hpp"
#include "holeprobe/holeburn.hpp"

namespace holeprobe::report {

namespace {

using nlohmann::json;

// JSON has no IEEE specials; encode them by name instead of null.
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

json edges_at(const BurnSpec& burn, double x_m) {
  const auto e = holeburn::hole_edges(x_m, burn);
  return {{"x_m", num(x_m)}, {"ell_l_hz", num(e.ell_l_hz)}, {"ell_r_hz", num(e.ell_r_hz)}};
}

json coupling_entry(const coupling::CouplingResult& c) {
  return {{"V_J", num(c.v_j)},
          {"dVdX0_J_per_m", num(c.dvdx0_j_per_m)},
          {"X_disp_m", num(c.x_disp_m)},
          {"carrier_phase_rad", num(c.carrier_phase_rad)}};
}

json regime_json(const bloch::RegimeReport& regime) {
  json entries = json::array();
  for (const auto& e : regime.entries) {
    entries.push_back({{"name", e.name}, {"value", num(e.value)}, {"verdict", e.verdict}});
  }
  return {{"entries", entries},
          {"any_warn", regime.any_warn},
          {"any_fail", regime.any_fail}};
}

json drive_json(const bloch::TwoLevelDrive& d) {
  return {{"rabi_rad_per_s", num(d.rabi_rad_s)},
          {"detuning_rad_per_s", num(d.detuning_rad_s)},
          {"decay_rad_per_s", num(d.decay_rad_s)},
          {"modulation_rad_per_s", num(d.modulation_rad_s)},
          {"mech_frequency_rad_per_s", num(d.mech_frequency_rad_s)}};
}

json body(const scenario::ScenarioResults& r) {
  json doc;

  json inputs;
  const auto& defaulted = r.config.defaulted_keys;
  for (const auto& info : cli::config_keys()) {
    const auto value = cli::get_parameter(r.config, info.key);
    const bool was_defaulted =
        std::find(defaulted.begin(), defaulted.end(), info.key) != defaulted.end();
    inputs[info.key] = {{"value", value ? num(*value) : json(nullptr)},
                        {"unit", info.unit},
                        {"default", was_defaulted}};
  }
  doc["inputs"] = inputs;

  doc["derived"] = {
      {"omega_m_rad_per_s", num(r.mech.omega_m_rad_s)},
      {"spring_n_per_m", num(r.mech.spring_n_per_m)},
      {"x_zpf_m", num(r.mech.x_zpf_m)},
      {"x_thermal_m", num(r.mech.x_thermal_m)},
      {"x_rms_m", num(r.mech.x_rms_m)},
      {"mean_occupancy", num(r.mech.mean_occupancy)},
      {"strain_k_hz_per_m2", num(r.strain_k_hz_per_m2)},
      {"ion_density_per_hz_per_m", num(r.ion_density_per_hz_m)},
      {"sigma0_m2", num(r.sigma0_m2)},
      {"omega0_rad_per_s", num(r.omega0_rad_s)},
      {"rabi_rad_per_s", num(r.rabi_rad_s)},
      {"edge_detuning_hz", num(r.edge_detuning_hz)},
      {"per_ion_phase_rad", num(r.per_ion_phase_rad)},
      {"per_ion_stark_J", num(r.per_ion_stark_j)},
  };

  const BurnSpec burn = r.config.burn(r.strain_k_hz_per_m2);
  const double half = burn.thickness_m / 2.0;
  json schedule = json::array();
  for (const auto& step : holeburn::burn_schedule(burn)) {
    schedule.push_back({{"gradient_t_per_m", num(step.gradient_t_per_m)},
                        {"scan_low_hz", num(step.scan_interval_hz[0])},
                        {"scan_high_hz", num(step.scan_interval_hz[1])}});
  }
  doc["burn"] = {{"schedule", schedule},
                 {"matching_ratio", num(r.gradient_matching_ratio)},
                 {"edges", json::array({edges_at(burn, -half), edges_at(burn, 0.0),
                                        edges_at(burn, half)})}};

  json couplings;
  for (const auto& c : r.couplings) {
    couplings[coupling::method_name(c.method)] = coupling_entry(c);
  }
  doc["coupling"] = couplings;

  doc["detection"] = {{"photon_rate_per_s", num(r.budget.photon_rate_per_s)},
                      {"overburn_time_s", num(r.budget.overburn_time_s)},
                      {"integration_time_s", num(r.budget.integration_time_s)},
                      {"shot_noise_phase_rad", num(r.budget.shot_noise_phase_rad)}};

  doc["sidebands"] = {{"thermal_phase_rad", num(r.sidebands.thermal_phase_rad)},
                      {"zeropoint_phase_rad", num(r.sidebands.zeropoint_phase_rad)},
                      {"total_phase_rad", num(r.sidebands.total_phase_rad)},
                      {"relative_excess", num(r.sidebands.relative_excess)}};

  doc["stability"] = {
      {"power_stability", r.stability.power_stability
                              ? num(*r.stability.power_stability)
                              : json(nullptr)},
      {"edge_zpf_shift_hz", num(r.stability.edge_zpf_shift_hz)},
      {"laser_linewidth_bound_hz", num(r.stability.laser_linewidth_bound_hz)}};

  double x_disp_closed = 0.0;
  for (const auto& row : r.reference) {
    if (row.name == "static_displacement") x_disp_closed = row.computed;
  }
  doc["backaction"] = {
      {"radiation_pressure_m", num(r.radiation_pressure_m)},
      {"dispersive_to_radiation_ratio",
       num(std::abs(x_disp_closed) / r.radiation_pressure_m)}};

  doc["drive"] = drive_json(r.drive);
  doc["regime"] = regime_json(r.regime);

  json reference = json::array();
  for (const auto& row : r.reference) {
    reference.push_back({{"name", row.name},
                         {"unit", row.unit},
                         {"computed", num(row.computed)},
                         {"quoted", num(row.quoted)},
                         {"ratio", num(row.ratio)}});
  }
  doc["reference_comparison"] = reference;
  doc["shot_noise_ratio_consistency"] = num(r.shot_ratio_consistency);
  doc["warnings"] = r.warnings;

  return doc;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string report_body_json(const scenario::ScenarioResults& r) {
  return body(r).dump(2) + "\n";
}

std::string report_json(const scenario::ScenarioResults& r,
                        const std::string& generated_at_utc) {
  json doc = body(r);
  doc["meta"] = {{"tool", "holeprobe"},
                 {"format_version", 1},
                 {"generated_at_utc", generated_at_utc}};
  return doc.dump(2) + "\n";
}

std::string report_json(const scenario::ScenarioResults& r) {
  return report_json(r, utc_now());
}

std::string reference_csv(const scenario::ScenarioResults& r) {
  cli::CsvBuilder csv({"name", "unit", "computed", "quoted", "ratio"});
  for (const auto& row : r.reference) {
    csv.row({row.name, row.unit, cli::format_double(row.computed),
             cli::format_double(row.quoted), cli::format_double(row.ratio)});
  }
  return csv.str();
}

std::string hole_profile_csv(const BurnSpec& burn, double displacement_m,
                             int n_samples) {
  const auto displaced = holeburn::hole_profile(burn, displacement_m, n_samples);
  const auto at_rest = holeburn::hole_profile(burn, 0.0, n_samples);
  cli::CsvBuilder csv({"x_m", "ell_l_hz", "ell_r_hz", "ell_l_rest_hz",
                       "ell_r_rest_hz"});
  for (size_t i = 0; i < displaced.samples.size(); ++i) {
    const auto& d = displaced.samples[i];
    const auto& s = at_rest.samples[i];
    csv.row({cli::format_double(d.x_m), cli::format_double(d.ell_l_hz),
             cli::format_double(d.ell_r_hz), cli::format_double(s.ell_l_hz),
             cli::format_double(s.ell_r_hz)});
  }
  return csv.str();
}

std::string bloch_trace_csv(const bloch::TwoLevelDrive& drive,
                            const bloch::BlochTrajectory& traj) {
  const bool with_adiabatic =
      std::abs(drive.modulation_rad_s) < std::abs(drive.detuning_rad_s);
  std::vector<std::string> header = {"t_s", "re_rho", "im_rho", "re_rho_pss",
                                     "im_rho_pss"};
  if (with_adiabatic) {
    header.push_back("re_rho_adiabatic");
    header.push_back("im_rho_adiabatic");
  }
  cli::CsvBuilder csv(header);
  for (size_t i = 0; i < traj.t_s.size(); ++i) {
    const double t = traj.t_s[i];
    const std::complex<double> pss = bloch::pss_coherence(drive, t);
    std::vector<std::string> cells = {
        cli::format_double(t), cli::format_double(traj.rho[i].real()),
        cli::format_double(traj.rho[i].imag()), cli::format_double(pss.real()),
        cli::format_double(pss.imag())};
    if (with_adiabatic) {
      const std::complex<double> ad = bloch::adiabatic_coherence(drive, t);
      cells.push_back(cli::format_double(ad.real()));
      cells.push_back(cli::format_double(ad.imag()));
    }
    csv.row(cells);
  }
  return csv.str();
}

std::string bloch_summary_json(const bloch::TwoLevelDrive& drive,
                               const bloch::BlochTrajectory& traj) {
  const std::complex<double> a0 = bloch::steady_state_coherence(drive);
  const double scale = std::abs(a0);

  double max_dev = 0.0;
  for (size_t i = 0; i < traj.t_s.size(); ++i) {
    max_dev = std::max(max_dev,
                       std::abs(traj.rho[i] - bloch::pss_coherence(drive, traj.t_s[i])));
  }

  json doc;
  doc["drive"] = drive_json(drive);
  doc["trajectory"] = {
      {"t_end_s", num(traj.t_s.empty() ? 0.0 : traj.t_s.back())},
      {"samples", traj.t_s.size()},
      {"periodic_residual", num(traj.periodic_residual)},
      {"converged", traj.converged}};
  doc["pss_deviation"] = {{"max_abs", num(max_dev)},
                          {"scale", num(scale)},
                          {"relative", num(scale > 0 ? max_dev / scale : 0.0)}};

  if (std::abs(drive.modulation_rad_s) < std::abs(drive.detuning_rad_s)) {
    double max_ad = 0.0;
    for (size_t i = 0; i < traj.t_s.size(); ++i) {
      max_ad = std::max(max_ad, std::abs(bloch::adiabatic_coherence(drive, traj.t_s[i]) -
                                         bloch::pss_coherence(drive, traj.t_s[i])));
    }
    doc["adiabatic_vs_pss"] = {{"max_abs", num(max_ad)},
                               {"scale", num(scale)},
                               {"relative", num(scale > 0 ? max_ad / scale : 0.0)}};
  } else {
    doc["adiabatic_vs_pss"] = nullptr;
  }

  doc["regime"] = regime_json(bloch::regime_check(drive));
  return doc.dump(2) + "\n";
}

std::string sweep_csv(const std::string& key,
                      const std::vector<scenario::SweepRow>& rows,
                      const std::vector<coupling::Method>& methods) {
  std::vector<std::string> header = {key, "omega_m_rad_per_s", "x_zpf_m",
                                     "strain_k_hz_per_m2",
                                     "ion_density_per_hz_per_m"};
  for (const auto m : methods) {
    const std::string name = coupling::method_name(m);
    header.push_back("V_" + name + "_J");
    header.push_back("dVdX0_" + name + "_J_per_m");
    header.push_back("X_disp_" + name + "_m");
    header.push_back("carrier_phase_" + name + "_rad");
  }
  header.insert(header.end(), {"thermal_phase_rad", "zeropoint_phase_rad",
                               "shot_noise_phase_rad", "error"});

  cli::CsvBuilder csv(header);
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.push_back(cli::format_double(row.value));
    if (row.results) {
      const auto& r = *row.results;
      cells.push_back(cli::format_double(r.mech.omega_m_rad_s));
      cells.push_back(cli::format_double(r.mech.x_zpf_m));
      cells.push_back(cli::format_double(r.strain_k_hz_per_m2));
      cells.push_back(cli::format_double(r.ion_density_per_hz_m));
      for (size_t i = 0; i < methods.size(); ++i) {
        const auto& c = r.couplings[i];
        cells.push_back(cli::format_double(c.v_j));
        cells.push_back(cli::format_double(c.dvdx0_j_per_m));
        cells.push_back(cli::format_double(c.x_disp_m));
        cells.push_back(cli::format_double(c.carrier_phase_rad));
      }
      cells.push_back(cli::format_double(r.sidebands.thermal_phase_rad));
      cells.push_back(cli::format_double(r.sidebands.zeropoint_phase_rad));
      cells.push_back(cli::format_double(r.budget.shot_noise_phase_rad));
      cells.push_back("");
    } else {
      for (size_t i = 1; i + 1 < header.size(); ++i) cells.push_back("");
      cells.push_back(row.error);
    }
    csv.row(cells);
  }
  return csv.str();
}

}  // namespace holeprobe::report
