// Command-line front end.
//
//   holeprobe paper-example            bundled worked example, full report
//   holeprobe coupling                 scenario report for a config
//   holeprobe hole                     burnt-edge profile across the thickness
//   holeprobe bloch                    integrate the modulated Bloch equation
//   holeprobe sweep                    scenario grid over one parameter
//
// Every subcommand reads the bundled configuration unless --config points
// at a file. Output goes to stdout, or into --out DIR as one file per
// product. Exit codes: 0 ok, 1 unexpected, 2 config error, 3 physics
// error, 4 numerics error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holeprobe/bloch.hpp"
#include "holeprobe/config.hpp"
#include "holeprobe/constants.hpp"
#include "holeprobe/errors.hpp"
#include "holeprobe/holeburn.hpp"
#include "holeprobe/report.hpp"
#include "holeprobe/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace holeprobe;

cli::ScenarioConfig load_config(const std::string& path) {
  if (path.empty()) return cli::default_config();
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open config file");
  std::ostringstream text;
  text << in.rdbuf();
  return cli::parse_config(text.str());
}

void emit(const std::string& out_dir, const std::string& filename,
          const std::string& content) {
  if (out_dir.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / filename;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string(), "cannot open output file");
  out << content;
  std::cerr << "wrote " << path.string() << "\n";
}

// Drive seen by the outermost edge ions: probe Rabi frequency, detuning of
// the 3*Delta edge distance, natural decay, and thermal-motion modulation.
bloch::TwoLevelDrive drive_from_config(const cli::ScenarioConfig& cfg) {
  const auto cant = cfg.cantilever();
  const auto ions = cfg.ions();
  const auto mech = model::derive_mechanics(cant, cfg.environment());
  const double k = model::strain_coupling_k(cant, ions);

  bloch::TwoLevelDrive drive;
  drive.rabi_rad_s = coupling::probe_rabi_frequency(cfg.probe(), ions.linewidth_rad_s);
  drive.detuning_rad_s = bloch::detuning_to_angular(3.0 * cfg.burn_delta_hz);
  drive.decay_rad_s = ions.linewidth_rad_s;
  drive.modulation_rad_s =
      bloch::detuning_to_angular(k * (cant.thickness_m / 2.0) * mech.x_rms_m);
  drive.mech_frequency_rad_s = mech.omega_m_rad_s;
  return drive;
}

// Step count keeping |delta_bar| * h <= 0.02 so RK4 error stays far below
// the periodic-residual tolerance.
int auto_steps_per_period(const bloch::TwoLevelDrive& drive) {
  const double ratio = std::abs(drive.complex_detuning()) /
                       drive.mech_frequency_rad_s;
  const double needed = kTwoPi * ratio / 0.02;
  return std::max(100, static_cast<int>(std::ceil(needed)));
}

int run_scenario_command(const std::string& config_path,
                         const std::string& method_text,
                         std::optional<double> displacement_m,
                         const std::string& out_dir, const std::string& format) {
  cli::ScenarioConfig cfg = load_config(config_path);
  if (displacement_m) cfg.coupling_probe_displacement_m = displacement_m;
  const auto methods = scenario::parse_methods(method_text);
  const auto results = scenario::run_scenario(cfg, methods);

  for (const auto& w : results.warnings) std::cerr << "warning: " << w << "\n";

  if (!out_dir.empty()) {
    emit(out_dir, "report.json", report::report_json(results));
    emit(out_dir, "reference_comparison.csv", report::reference_csv(results));
    return 0;
  }
  if (format == "csv") {
    std::cout << report::reference_csv(results);
  } else {
    std::cout << report::report_json(results);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dispersive probe of a spectral-hole-functionalized cantilever"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format = "json";
  std::string method_text = "all";
  double displacement_m = 0.0;
  bool have_displacement = false;
  int samples = 201;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--config", config_path,
                    "configuration file (default: bundled worked example)");
    sub->add_option("--out", out_dir, "directory to write output files into");
    if (with_format) {
      sub->add_option("--format", format, "stdout format")
          ->check(CLI::IsMember({"json", "csv"}));
    }
  };

  CLI::App* paper = app.add_subcommand(
      "paper-example", "run the bundled worked example and report every figure");
  paper->add_option("--out", out_dir, "directory to write output files into");

  CLI::App* coupling_cmd =
      app.add_subcommand("coupling", "full scenario report for a configuration");
  add_common(coupling_cmd, true);
  coupling_cmd->add_option("--method", method_text,
                           "closed, lowt, numeric, all, or a comma list");
  coupling_cmd
      ->add_option("--displacement-m", displacement_m,
                   "evaluate V at this tip displacement instead of the "
                   "self-consistent one")
      ->each([&](const std::string&) { have_displacement = true; });

  CLI::App* hole_cmd = app.add_subcommand(
      "hole", "burnt-edge profile across the thickness, at rest and displaced");
  add_common(hole_cmd, false);
  hole_cmd->add_option("--displacement-m", displacement_m,
                       "tip displacement shifting the edges");
  hole_cmd->add_option("--samples", samples, "rows across the thickness")
      ->check(CLI::Range(2, 1000000));

  double rabi = 0.0, detuning = 0.0, decay = 0.0, modulation = 0.0, mech_freq = 0.0;
  bool have_rabi = false, have_detuning = false, have_decay = false;
  bool have_modulation = false, have_mech = false;
  std::string start = "pss";
  double periods = 5.0;
  double t_end_s = 0.0;
  bool have_t_end = false;
  int steps_per_period = 0;
  int record_stride = 0;
  bool require_convergence = false;

  CLI::App* bloch_cmd = app.add_subcommand(
      "bloch", "integrate the modulated two-level coherence for the edge ions");
  add_common(bloch_cmd, true);
  bloch_cmd->add_option("--rabi-rad-s", rabi, "override Rabi frequency")
      ->each([&](const std::string&) { have_rabi = true; });
  bloch_cmd->add_option("--detuning-rad-s", detuning, "override carrier detuning")
      ->each([&](const std::string&) { have_detuning = true; });
  bloch_cmd->add_option("--decay-rad-s", decay, "override decay rate")
      ->each([&](const std::string&) { have_decay = true; });
  bloch_cmd->add_option("--modulation-rad-s", modulation, "override modulation depth")
      ->each([&](const std::string&) { have_modulation = true; });
  bloch_cmd->add_option("--mech-freq-rad-s", mech_freq, "override modulation frequency")
      ->each([&](const std::string&) { have_mech = true; });
  bloch_cmd->add_option("--start", start, "initial state")
      ->check(CLI::IsMember({"zero", "pss"}));
  bloch_cmd->add_option("--periods", periods, "integration span in mechanical periods")
      ->check(CLI::PositiveNumber);
  bloch_cmd->add_option("--t-end-s", t_end_s, "integration span in seconds")
      ->each([&](const std::string&) { have_t_end = true; });
  bloch_cmd->add_option("--steps-per-period", steps_per_period,
                        "RK4 steps per period (default keeps |delta_bar| h <= 0.02)");
  bloch_cmd->add_option("--record-stride", record_stride,
                        "record every n-th step (default targets ~4000 rows)");
  bloch_cmd->add_flag("--require-convergence", require_convergence,
                      "fail (exit 4) unless the final period is periodic");

  std::string sweep_key;
  std::string values_text;
  double from = 0.0, to = 0.0;
  int num = 0;
  std::string sweep_method = "closed";

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "re-run the scenario over one parameter");
  add_common(sweep_cmd, false);
  sweep_cmd->add_option("--param", sweep_key, "configuration key to sweep")
      ->required();
  sweep_cmd->add_option("--values", values_text, "comma-separated values");
  sweep_cmd->add_option("--from", from, "linear grid start");
  sweep_cmd->add_option("--to", to, "linear grid end");
  sweep_cmd->add_option("--num", num, "linear grid size")->check(CLI::Range(2, 100000));
  sweep_cmd->add_option("--method", sweep_method,
                        "closed, lowt, numeric, all, or a comma list");

  try {
    app.parse(argc, argv);

    if (paper->parsed()) {
      const cli::ScenarioConfig cfg = cli::default_config();
      const auto methods = scenario::parse_methods("all");
      const auto results = scenario::run_scenario(cfg, methods);
      for (const auto& w : results.warnings) std::cerr << "warning: " << w << "\n";
      if (!out_dir.empty()) {
        emit(out_dir, "report.json", report::report_json(results));
        emit(out_dir, "reference_comparison.csv", report::reference_csv(results));
        const BurnSpec burn = cfg.burn(results.strain_k_hz_per_m2);
        emit(out_dir, "hole_profile.csv",
             report::hole_profile_csv(burn, results.couplings[0].x_disp_m, samples));
      } else {
        std::cout << report::report_json(results);
      }
      return 0;
    }

    if (coupling_cmd->parsed()) {
      return run_scenario_command(
          config_path, method_text,
          have_displacement ? std::optional<double>(displacement_m) : std::nullopt,
          out_dir, format);
    }

    if (hole_cmd->parsed()) {
      const cli::ScenarioConfig cfg = load_config(config_path);
      const double k = model::strain_coupling_k(cfg.cantilever(), cfg.ions());
      emit(out_dir, "hole_profile.csv",
           report::hole_profile_csv(cfg.burn(k), displacement_m, samples));
      return 0;
    }

    if (bloch_cmd->parsed()) {
      const cli::ScenarioConfig cfg = load_config(config_path);
      bloch::TwoLevelDrive drive = drive_from_config(cfg);
      if (have_rabi) drive.rabi_rad_s = rabi;
      if (have_detuning) drive.detuning_rad_s = detuning;
      if (have_decay) drive.decay_rad_s = decay;
      if (have_modulation) drive.modulation_rad_s = modulation;
      if (have_mech) drive.mech_frequency_rad_s = mech_freq;
      drive.validate();

      bloch::IntegrationOptions opts;
      opts.start = (start == "zero") ? bloch::BlochStart::kZero
                                     : bloch::BlochStart::kPeriodicSteadyState;
      opts.steps_per_period =
          steps_per_period > 0 ? steps_per_period : auto_steps_per_period(drive);
      opts.require_periodic_convergence = require_convergence;

      const double period = kTwoPi / drive.mech_frequency_rad_s;
      double t_end = periods * period;
      if (have_t_end) t_end = t_end_s;
      // A cold start needs several decay times before periodicity can hold.
      if (start == "zero" && !have_t_end) {
        t_end = std::max(t_end, 10.0 / drive.decay_rad_s);
      }

      const double total_steps = t_end / period * opts.steps_per_period;
      opts.record_stride =
          record_stride > 0
              ? record_stride
              : std::max(1, static_cast<int>(std::ceil(total_steps / 4000.0)));

      const auto traj = bloch::integrate_bloch(drive, t_end, opts);
      if (!out_dir.empty()) {
        emit(out_dir, "bloch_summary.json", report::bloch_summary_json(drive, traj));
        emit(out_dir, "bloch_trace.csv", report::bloch_trace_csv(drive, traj));
      } else if (format == "csv") {
        std::cout << report::bloch_trace_csv(drive, traj);
      } else {
        std::cout << report::bloch_summary_json(drive, traj);
      }
      return 0;
    }

    if (sweep_cmd->parsed()) {
      const cli::ScenarioConfig cfg = load_config(config_path);
      std::vector<double> values;
      if (!values_text.empty()) {
        size_t pos = 0;
        while (pos <= values_text.size()) {
          const size_t comma = std::min(values_text.find(',', pos), values_text.size());
          const std::string token = values_text.substr(pos, comma - pos);
          try {
            size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
          } catch (const std::exception&) {
            throw ParseError("--values", "not a number: '" + token + "'");
          }
          pos = comma + 1;
        }
      } else if (num >= 2) {
        for (int i = 0; i < num; ++i) {
          values.push_back(from + (to - from) * i / (num - 1));
        }
      } else {
        throw ParseError("--values", "need --values or --from/--to/--num");
      }

      const auto methods = scenario::parse_methods(sweep_method);
      const auto rows = scenario::run_sweep(cfg, sweep_key, values, methods);
      emit(out_dir, "sweep.csv", report::sweep_csv(sweep_key, rows, methods));
      return 0;
    }

    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PhysicsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NumericsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
