// Full pipeline for one configuration: mechanics, burn geometry, coupling
// by one or more evaluation methods, detection budget, sideband phases,
// stability requirements, and the modulated two-level drive the edge ions
// actually see. Also compares the derived figures against the rounded
// one-significant-figure values quoted for the bundled worked example, so
// a report shows at a glance whether a run still lands on the expected
// operating point.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holeprobe/bloch.hpp"
#include "holeprobe/config.hpp"
#include "holeprobe/coupling.hpp"
#include "holeprobe/model.hpp"
#include "holeprobe/observables.hpp"

namespace holeprobe::scenario {

// One derived figure against its rounded reference value. The references
// are one-significant-figure quotes, so ratio is a sanity indicator, not a
// tolerance test: order unity means the run sits on the documented
// operating point.
struct ReferenceRow {
  std::string name;
  std::string unit;
  double computed = 0.0;
  double quoted = 0.0;
  double ratio = 0.0;  // computed / quoted
};

struct ScenarioResults {
  cli::ScenarioConfig config;

  model::MechanicsDerived mech;
  double strain_k_hz_per_m2 = 0.0;       // k = 3 E |s| / L^2
  double ion_density_per_hz_m = 0.0;     // n = rho A / Gamma_inh
  double sigma0_m2 = 0.0;                // resonant scattering cross-section
  double omega0_rad_s = 0.0;             // probe carrier angular frequency
  double rabi_rad_s = 0.0;               // Omega for the probe intensity

  double edge_detuning_hz = 0.0;         // carrier-to-edge distance 3*Delta
  double per_ion_phase_rad = 0.0;        // single edge ion, full transit
  double per_ion_stark_j = 0.0;
  double gradient_matching_ratio = 0.0;  // |g (e/2) gradB| / Delta

  // One entry per requested method, in the order requested.
  std::vector<coupling::CouplingResult> couplings;

  observables::DetectionBudget budget;
  observables::SidebandReport sidebands;  // from the closed-form dV/dX
  double radiation_pressure_m = 0.0;
  observables::StabilityReport stability;

  bloch::TwoLevelDrive drive;  // edge ions, modulation depth from x_rms
  bloch::RegimeReport regime;

  std::vector<ReferenceRow> reference;
  // Worst-over-best ratio spread of the shot-noise reference rows minus 1;
  // both rows scale as 1/sqrt(t), so a large spread means the quoted pair
  // is internally inconsistent with the computed budget.
  double shot_ratio_consistency = 0.0;

  std::vector<std::string> warnings;
};

// Accepts "closed", "lowt", "numeric", "all", or a comma-separated list;
// "all" expands to closed, lowt, numeric. Duplicates collapse. Throws
// ParseError on anything else.
std::vector<coupling::Method> parse_methods(const std::string& text);

// Runs the whole chain. Validates cfg first, so programmatically built
// configs get the same guarantees as parsed ones. Throws the library's
// Error subtypes on any breach.
ScenarioResults run_scenario(const cli::ScenarioConfig& cfg,
                             const std::vector<coupling::Method>& methods);

struct SweepRow {
  double value = 0.0;
  std::optional<ScenarioResults> results;  // empty on per-row failure
  std::string error;                       // failure message when empty
};

// Re-runs the scenario with cfg's `key` set to each value in turn. A row
// that throws is captured as its error message instead of aborting the
// sweep; an unknown key still throws immediately.
std::vector<SweepRow> run_sweep(const cli::ScenarioConfig& cfg,
                                const std::string& key,
                                const std::vector<double>& values,
                                const std::vector<coupling::Method>& methods);

}  // namespace holeprobe::scenario
