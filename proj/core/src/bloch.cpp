#include "holeprobe/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "holeprobe/constants.hpp"
#include "holeprobe/errors.hpp"

namespace holeprobe::bloch {

namespace {

using cplx = std::complex<double>;

constexpr cplx kI{0.0, 1.0};

bool finite(double v) { return std::isfinite(v); }

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

// Right-hand side of the coherence equation at time t.
cplx rhs(const TwoLevelDrive& d, double t, cplx rho) {
  const double delta = d.detuning_rad_s + d.modulation_rad_s * std::cos(d.mech_frequency_rad_s * t);
  return (kI * delta - 0.5 * d.decay_rad_s) * rho + kI * (0.5 * d.rabi_rad_s);
}

cplx rk4_step(const TwoLevelDrive& d, double t, cplx rho, double h) {
  const cplx k1 = rhs(d, t, rho);
  const cplx k2 = rhs(d, t + 0.5 * h, rho + 0.5 * h * k1);
  const cplx k3 = rhs(d, t + 0.5 * h, rho + 0.5 * h * k2);
  const cplx k4 = rhs(d, t + h, rho + h * k3);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

std::string regime_verdict(double value) {
  if (value < tol::kRegimePass) return "pass";
  if (value < tol::kRegimeWarn) return "warn";
  return "fail";
}

}  // namespace

double detuning_to_angular(double detuning_hz) { return kTwoPi * detuning_hz; }

cplx TwoLevelDrive::complex_detuning() const {
  return {detuning_rad_s, 0.5 * decay_rad_s};
}

void TwoLevelDrive::validate() const {
  require(finite(rabi_rad_s) && rabi_rad_s >= 0.0, "drive: Rabi frequency must be finite and >= 0");
  require(finite(detuning_rad_s), "drive: detuning must be finite");
  require(finite(decay_rad_s) && decay_rad_s > 0.0, "drive: decay rate must be finite and > 0");
  require(finite(modulation_rad_s), "drive: modulation depth must be finite");
  require(finite(mech_frequency_rad_s) && mech_frequency_rad_s >= 0.0,
          "drive: mechanical frequency must be finite and >= 0");
}

cplx steady_state_coherence(const TwoLevelDrive& drive) {
  drive.validate();
  return (kI * (0.5 * drive.rabi_rad_s)) / cplx{0.5 * drive.decay_rad_s, -drive.detuning_rad_s};
}

SteadyStateDiagnostic steady_state_diagnostic(const TwoLevelDrive& drive) {
  drive.validate();
  if (drive.detuning_rad_s == 0.0) {
    throw ZeroDetuningError("steady-state shortcut -Omega/(2 delta) undefined at zero detuning");
  }
  SteadyStateDiagnostic out;
  out.exact = steady_state_coherence(drive);
  out.approx = cplx{-drive.rabi_rad_s / (2.0 * drive.detuning_rad_s), 0.0};
  const double scale = std::abs(out.exact);
  out.rel_error = scale > 0.0 ? std::abs(out.exact - out.approx) / scale
                              : std::numeric_limits<double>::quiet_NaN();
  return out;
}

PssCoefficients pss_coefficients(const TwoLevelDrive& drive) {
  drive.validate();
  require(drive.mech_frequency_rad_s > 0.0,
          "periodic steady state needs a positive mechanical frequency");
  const cplx dbar = drive.complex_detuning();
  const double wm = drive.mech_frequency_rad_s;
  PssCoefficients c;
  c.a0 = steady_state_coherence(drive);
  // First-order sideband amplitudes; the denominators are the distances of
  // +-omega_M from the complex pole, nonzero whenever Gamma > 0.
  c.a_plus = (0.5 * drive.modulation_rad_s) * c.a0 / (wm - dbar);
  c.a_minus = -(0.5 * drive.modulation_rad_s) * c.a0 / (wm + dbar);
  return c;
}

cplx pss_coherence(const TwoLevelDrive& drive, double t_s) {
  const PssCoefficients c = pss_coefficients(drive);
  const double phase = drive.mech_frequency_rad_s * t_s;
  return c.a0 + c.a_plus * std::exp(kI * phase) + c.a_minus * std::exp(-kI * phase);
}

cplx adiabatic_coherence(const TwoLevelDrive& drive, double t_s) {
  drive.validate();
  if (std::abs(drive.modulation_rad_s) >= std::abs(drive.detuning_rad_s)) {
    throw ZeroDetuningError(
        "adiabatic coherence undefined: modulation depth reaches the detuning, "
        "instantaneous detuning crosses zero within the cycle");
  }
  const double delta =
      drive.detuning_rad_s +
      drive.modulation_rad_s * std::cos(drive.mech_frequency_rad_s * t_s);
  return {-drive.rabi_rad_s / (2.0 * delta), 0.0};
}

BlochTrajectory integrate_bloch(const TwoLevelDrive& drive, double t_end_s,
                                const IntegrationOptions& opts) {
  drive.validate();
  require(drive.mech_frequency_rad_s > 0.0,
          "integrator steps are defined per mechanical period; omega_M must be > 0");
  require(finite(t_end_s) && t_end_s > 0.0, "integration horizon must be positive");
  require(opts.steps_per_period >= 100, "steps_per_period must be >= 100");
  require(opts.record_stride >= 1, "record_stride must be >= 1");

  const double period = kTwoPi / drive.mech_frequency_rad_s;
  const double h = period / static_cast<double>(opts.steps_per_period);
  const long n_steps = static_cast<long>(std::ceil(t_end_s / h - 1e-9));
  require(n_steps >= 1, "integration horizon shorter than one step");
  if (opts.require_periodic_convergence) {
    require(n_steps >= 2L * opts.steps_per_period,
            "periodic convergence check needs at least two mechanical periods");
  }

  cplx rho = opts.start == BlochStart::kPeriodicSteadyState
                 ? pss_coherence(drive, 0.0)
                 : cplx{0.0, 0.0};

  BlochTrajectory out;
  out.t_s.reserve(static_cast<size_t>(n_steps / opts.record_stride) + 2);
  out.rho.reserve(out.t_s.capacity());

  // Ring buffer of the last steps_per_period + 1 states, so the final state
  // of every step can be compared against the state one whole period back.
  const int ring_size = opts.steps_per_period + 1;
  std::vector<cplx> ring(static_cast<size_t>(ring_size));
  double max_period_diff = 0.0;
  double max_mag = 0.0;

  out.t_s.push_back(0.0);
  out.rho.push_back(rho);
  ring[0] = rho;

  for (long step = 0; step < n_steps; ++step) {
    const double t = static_cast<double>(step) * h;
    rho = rk4_step(drive, t, rho, h);
    if (!std::isfinite(rho.real()) || !std::isfinite(rho.imag())) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "integration diverged at t = %.6g s; reduce the step "
                    "(|delta_bar| * h = %.3g)",
                    t + h, std::abs(drive.complex_detuning()) * h);
      throw NonConvergentError(buf);
    }
    const long idx = step + 1;
    max_mag = std::max(max_mag, std::abs(rho));
    if (idx >= opts.steps_per_period && idx + opts.steps_per_period >= n_steps) {
      // Inside the final period: diff against the state one period earlier.
      const cplx prev = ring[static_cast<size_t>((idx - opts.steps_per_period) % ring_size)];
      max_period_diff = std::max(max_period_diff, std::abs(rho - prev));
    }
    ring[static_cast<size_t>(idx % ring_size)] = rho;
    if (idx % opts.record_stride == 0 || idx == n_steps) {
      out.t_s.push_back(static_cast<double>(idx) * h);
      out.rho.push_back(rho);
    }
  }

  if (n_steps >= 2 * opts.steps_per_period) {
    // Residual is measured against the unmodulated steady-state magnitude
    // |a0|, falling back to the trajectory scale for an undriven decay.
    double scale = std::abs(steady_state_coherence(drive));
    if (scale == 0.0) scale = max_mag;
    scale = std::max(scale, std::numeric_limits<double>::min());
    out.periodic_residual = max_period_diff / scale;
    out.converged = out.periodic_residual <= tol::kPeriodicResidualRel;
  } else {
    out.periodic_residual = std::numeric_limits<double>::quiet_NaN();
    out.converged = false;
  }

  if (opts.require_periodic_convergence && !out.converged) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "trajectory not periodic after %.6g s: residual %.3g exceeds %.3g",
                  static_cast<double>(n_steps) * h, out.periodic_residual,
                  tol::kPeriodicResidualRel);
    throw NonConvergentError(buf);
  }
  return out;
}

PssDeviation pss_deviation_scan(const TwoLevelDrive& drive, int periods,
                                int steps_per_period) {
  require(periods >= 1, "deviation scan needs at least one period");
  require(steps_per_period >= 100, "steps_per_period must be >= 100");
  const PssCoefficients c = pss_coefficients(drive);

  const double period = kTwoPi / drive.mech_frequency_rad_s;
  const double h = period / static_cast<double>(steps_per_period);
  const long n_steps = static_cast<long>(periods) * steps_per_period;

  cplx rho = pss_coherence(drive, 0.0);
  double max_diff = 0.0;
  for (long step = 0; step < n_steps; ++step) {
    const double t = static_cast<double>(step) * h;
    rho = rk4_step(drive, t, rho, h);
    const double t_next = static_cast<double>(step + 1) * h;
    const double phase = drive.mech_frequency_rad_s * t_next;
    const cplx ref = c.a0 + c.a_plus * std::exp(kI * phase) + c.a_minus * std::exp(-kI * phase);
    // test the fresh sample, not the accumulator: once the state overflows,
    // inf - inf turns the sample into NaN and std::max would keep the stale
    // finite maximum, masking the divergence
    const double diff = std::abs(rho - ref);
    if (!std::isfinite(diff)) {
      throw NonConvergentError("deviation scan diverged; step too coarse for this detuning");
    }
    max_diff = std::max(max_diff, diff);
  }

  PssDeviation out;
  out.max_abs_deviation = max_diff;
  out.scale = std::abs(c.a0);
  out.relative = out.scale > 0.0 ? max_diff / out.scale
                                 : std::numeric_limits<double>::quiet_NaN();
  return out;
}

RegimeReport regime_check(const TwoLevelDrive& drive) {
  drive.validate();
  RegimeReport report;
  const double abs_dbar = std::abs(drive.complex_detuning());
  const double abs_det = std::abs(drive.detuning_rad_s);
  const double inf = std::numeric_limits<double>::infinity();

  const double adiabaticity =
      abs_dbar > 0.0 ? (drive.mech_frequency_rad_s / abs_dbar) *
                           (drive.mech_frequency_rad_s / abs_dbar)
                     : inf;
  const double decoherence = abs_det > 0.0 ? drive.decay_rad_s / abs_det : inf;
  const double excitation = abs_det > 0.0 ? drive.rabi_rad_s / abs_det : inf;

  report.entries.push_back({"adiabaticity", adiabaticity, regime_verdict(adiabaticity)});
  report.entries.push_back({"decoherence", decoherence, regime_verdict(decoherence)});
  report.entries.push_back({"excitation", excitation, regime_verdict(excitation)});
  for (const auto& entry : report.entries) {
    if (entry.verdict == "warn") report.any_warn = true;
    if (entry.verdict == "fail") report.any_fail = true;
  }
  return report;
}

}  // namespace holeprobe::bloch
