// Serialization of scenario and trajectory results.
//
// JSON bodies are byte-stable for identical inputs: keys are emitted in
// sorted order, numbers in shortest round-trip form, and non-finite values
// as the strings "inf", "-inf", "nan" (raw IEEE specials are not
// representable in JSON and would otherwise turn into null). report_json
// wraps the body with a meta block whose timestamp is the only
// run-dependent field.

#pragma once

#include <string>
#include <vector>

#include "holeprobe/bloch.hpp"
#include "holeprobe/scenario.hpp"
#include "holeprobe/specs.hpp"

namespace holeprobe::report {

// Full scenario report without the meta block.
std::string report_body_json(const scenario::ScenarioResults& r);

// Body plus meta {tool, format_version, generated_at_utc}. The overload
// with an explicit timestamp exists so tests can pin the whole document.
std::string report_json(const scenario::ScenarioResults& r);
std::string report_json(const scenario::ScenarioResults& r,
                        const std::string& generated_at_utc);

// name, unit, computed, quoted, ratio for every reference row.
std::string reference_csv(const scenario::ScenarioResults& r);

// Edge profile across the thickness: x_m, displaced edges, at-rest edges.
std::string hole_profile_csv(const BurnSpec& burn, double displacement_m,
                             int n_samples);

// Integrated trajectory against the closed forms: t_s, re/im of the
// integrated coherence and of the periodic steady state; adiabatic columns
// appear only when the adiabatic form is defined (|eps| < |delta_r|).
std::string bloch_trace_csv(const bloch::TwoLevelDrive& drive,
                            const bloch::BlochTrajectory& traj);

// Drive, convergence diagnostics, worst deviation from the periodic steady
// state over the recorded samples, and the regime table.
std::string bloch_summary_json(const bloch::TwoLevelDrive& drive,
                               const bloch::BlochTrajectory& traj);

// One row per sweep point. First column carries the swept key's name;
// failed rows keep the value and the error message, with data cells empty.
std::string sweep_csv(const std::string& key,
                      const std::vector<scenario::SweepRow>& rows,
                      const std::vector<coupling::Method>& methods);

}  // namespace holeprobe::report
