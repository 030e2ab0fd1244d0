// Optical Bloch dynamics of a hole-edge ion class driven by the probe.
//
// A single detuning class of ions near a burned hole edge behaves, in the
// rotating frame of the probe and after the RWA, as a damped two-level
// coherence rho = <sigma_minus> obeying
//
//   d rho / dt = (i * delta(t) - Gamma/2) * rho + i * Omega / 2,
//   delta(t)   = delta_r + eps * cos(omega_M * t)
//
// where delta_r is the carrier-to-class detuning, eps the depth of the
// detuning modulation imposed by cantilever motion through the strain
// shift, omega_M the mechanical angular frequency, Gamma the optical decay
// rate and Omega the probe Rabi frequency.  All five are angular rates in
// rad/s; detuning_to_angular() is the one sanctioned bridge from the Hz
// detunings used elsewhere in this library.
//
// Three descriptions of the driven coherence are provided and meant to be
// played against each other:
//   * steady_state_coherence: the exact fixed point at eps = 0,
//   * pss_coherence: the periodic steady state to first order in eps,
//     rho(t) = a0 + a_plus e^{+i omega_M t} + a_minus e^{-i omega_M t},
//   * adiabatic_coherence: the instantaneous-follow limit -Omega/(2 delta(t)),
//     valid when omega_M is slow compared to the detuning.
// integrate_bloch() solves the same equation with fixed-step RK4 and is the
// arbiter whenever the closed forms disagree.
//
// Numerical caution: explicit RK4 must resolve the fastest phase rate
// |delta_bar| = |delta_r + i Gamma/2|, not merely the mechanical period.
// Callers pick steps_per_period with that in mind; the library refuses
// obviously unresolved settings but cannot catch every bad choice.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace holeprobe::bloch {

// Single sanctioned Hz -> rad/s conversion for detunings and rates.
double detuning_to_angular(double detuning_hz);

struct TwoLevelDrive {
  double rabi_rad_s = 0.0;            // Omega, probe Rabi frequency
  double detuning_rad_s = 0.0;        // delta_r, carrier-to-class detuning
  double decay_rad_s = 0.0;           // Gamma, optical energy decay rate
  double modulation_rad_s = 0.0;      // eps, detuning modulation depth
  double mech_frequency_rad_s = 0.0;  // omega_M, modulation frequency

  // delta_bar = delta_r + i*Gamma/2, the complex pole location.
  std::complex<double> complex_detuning() const;

  // Throws ValidationError on non-finite fields, negative Omega or omega_M,
  // or non-positive Gamma.  Gamma > 0 keeps the pole off the real axis, so
  // every fixed point and periodic orbit used below exists.
  void validate() const;
};

// Exact fixed point of the unmodulated equation:
//   rho_ss = (i Omega / 2) / (Gamma/2 - i delta_r).
std::complex<double> steady_state_coherence(const TwoLevelDrive& drive);

// Exact fixed point against the large-detuning shortcut -Omega/(2 delta_r).
// rel_error = |exact - approx| / |exact|; the shortcut drops terms of order
// Gamma/(2 delta_r) and is quoted so callers can see what they are paying.
struct SteadyStateDiagnostic {
  std::complex<double> exact;
  std::complex<double> approx;
  double rel_error = 0.0;
};
SteadyStateDiagnostic steady_state_diagnostic(const TwoLevelDrive& drive);

// First-order periodic steady state, rho(t) = a0 + a_plus e^{+i omega_M t}
// + a_minus e^{-i omega_M t} with
//   a0      = exact steady state at eps = 0,
//   a_plus  = +(eps/2) a0 / (omega_M - delta_bar),
//   a_minus = -(eps/2) a0 / (omega_M + delta_bar).
// Keeping a0 exact (rather than its large-detuning shortcut) removes a DC
// offset of order Gamma/(2 delta_r) that would otherwise dominate the
// comparison against the integrator at small Gamma.
struct PssCoefficients {
  std::complex<double> a0;
  std::complex<double> a_plus;
  std::complex<double> a_minus;
};
PssCoefficients pss_coefficients(const TwoLevelDrive& drive);

// Evaluates the periodic steady state at time t_s.  Equivalent closed form:
//   a0 * (1 + eps (delta_bar cos(omega_M t) + i omega_M sin(omega_M t))
//              / (omega_M^2 - delta_bar^2)).
std::complex<double> pss_coherence(const TwoLevelDrive& drive, double t_s);

// Instantaneous-follow coherence -Omega / (2 (delta_r + eps cos(omega_M t))).
// Throws ZeroDetuningError if |eps| >= |delta_r|, because the instantaneous
// detuning then crosses zero somewhere in the cycle.
std::complex<double> adiabatic_coherence(const TwoLevelDrive& drive, double t_s);

enum class BlochStart {
  kZero,                 // rho(0) = 0, bare ions suddenly exposed to the probe
  kPeriodicSteadyState,  // rho(0) = pss_coherence(drive, 0)
};

struct IntegrationOptions {
  BlochStart start = BlochStart::kZero;
  // RK4 steps per mechanical period 2*pi/omega_M.  Must be >= 100; choose
  // large enough that |delta_bar| * h stays well below 1.
  int steps_per_period = 1000;
  // Record every record_stride-th step (>= 1).  The initial and final states
  // are always recorded.
  int record_stride = 1;
  // When set, a trajectory whose final period fails the residual test makes
  // integrate_bloch throw NonConvergentError instead of returning.
  bool require_periodic_convergence = false;
};

struct BlochTrajectory {
  std::vector<double> t_s;
  std::vector<std::complex<double>> rho;
  // Largest |rho(t) - rho(t - T)| over the final mechanical period, relative
  // to the unmodulated steady-state magnitude |a0| (trajectory scale when
  // that vanishes); NaN when fewer than two periods were integrated.
  double periodic_residual = 0.0;
  bool converged = false;
};

// Integrates the modulated equation from t = 0 to at least t_end_s with
// fixed-step RK4, h = T / steps_per_period, T = 2*pi/omega_M.  The end time
// is rounded up to a whole number of steps so that samples one period apart
// land on common grid points; the recorded t_s reflect the actual grid.
// Throws ValidationError on bad options and, when requested, throws
// NonConvergentError if the final period is not yet periodic.
BlochTrajectory integrate_bloch(const TwoLevelDrive& drive, double t_end_s,
                                const IntegrationOptions& opts = {});

// Streaming comparison of the integrator against pss_coherence.  Starts on
// the closed-form orbit, integrates the given number of whole periods and
// tracks the worst pointwise discrepancy.  relative is max|diff| / |a0|;
// the first-order orbit is in error at second order in eps/delta_bar, so a
// healthy result is relative = O((eps/delta_r)^2).
struct PssDeviation {
  double max_abs_deviation = 0.0;
  double scale = 0.0;  // |a0|
  double relative = 0.0;
};
PssDeviation pss_deviation_scan(const TwoLevelDrive& drive, int periods,
                                int steps_per_period);

// Validity bookkeeping for the closed forms.  Each entry is a dimensionless
// ratio that should be small, with a verdict from the shared thresholds:
// pass below tol::kRegimePass, warn below tol::kRegimeWarn, fail otherwise.
//   adiabaticity: (omega_M / |delta_bar|)^2, slow-modulation assumption
//   decoherence:  Gamma / |delta_r|, dispersive-phase assumption
//   excitation:   |Omega / delta_r|, weak-excitation assumption
struct RegimeEntry {
  std::string name;
  double value = 0.0;
  std::string verdict;
};
struct RegimeReport {
  std::vector<RegimeEntry> entries;
  bool any_warn = false;
  bool any_fail = false;
};
RegimeReport regime_check(const TwoLevelDrive& drive);

}  // namespace holeprobe::bloch
