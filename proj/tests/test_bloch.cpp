// Driven two-level coherence: closed forms against each other, against the
// defining differential equation, and against the RK4 integrator (whose
// own order is measured against the exact unmodulated solution).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "fixtures.hpp"
#include "holeprobe/bloch.hpp"
#include "holeprobe/constants.hpp"
#include "holeprobe/errors.hpp"

using namespace holeprobe;
using cplx = std::complex<double>;

namespace {

constexpr cplx kI{0.0, 1.0};

bloch::TwoLevelDrive drive(double rabi, double det, double decay, double mod,
                           double mech) {
  bloch::TwoLevelDrive d;
  d.rabi_rad_s = rabi;
  d.detuning_rad_s = det;
  d.decay_rad_s = decay;
  d.modulation_rad_s = mod;
  d.mech_frequency_rad_s = mech;
  return d;
}

// Exact solution of the unmodulated equation from rho(0) = rho0.
cplx exact_unmodulated(const bloch::TwoLevelDrive& d, cplx rho0, double t) {
  const cplx ss = bloch::steady_state_coherence(d);
  const cplx pole = kI * d.detuning_rad_s - 0.5 * d.decay_rad_s;
  return ss + (rho0 - ss) * std::exp(pole * t);
}

}  // namespace

TEST_CASE("steady state annihilates the right-hand side") {
  const auto d = drive(1e3, 1e5, 1e2, 0.0, 2e4);
  const cplx ss = bloch::steady_state_coherence(d);
  const cplx residual =
      (kI * d.detuning_rad_s - 0.5 * d.decay_rad_s) * ss + kI * (0.5 * d.rabi_rad_s);
  CHECK(std::abs(residual) < 1e-14 * (0.5 * d.rabi_rad_s));
  // magnitude: |rho_ss| = Omega / (2 |delta_bar|)
  CHECK(std::abs(ss) ==
        rel(d.rabi_rad_s / (2.0 * std::abs(d.complex_detuning())), 1e-14));
}

TEST_CASE("large-detuning shortcut costs Gamma/(2 delta), and is priced") {
  const auto d = drive(1e3, 1e5, 1e1, 0.0, 2e4);  // Gamma/delta = 1e-4
  const auto diag = bloch::steady_state_diagnostic(d);
  CHECK(diag.rel_error ==
        rel(d.decay_rad_s / (2.0 * d.detuning_rad_s), 1e-2));
  CHECK(diag.approx.imag() == 0.0);
  CHECK_THROWS_AS(bloch::steady_state_diagnostic(drive(1e3, 0.0, 1e2, 0.0, 2e4)),
                  ZeroDetuningError);
}

TEST_CASE("PSS coefficients satisfy the equation of motion to first order") {
  // Substituting rho = a0 + a+ e^{i w t} + a- e^{-i w t} into the equation
  // leaves exactly the second-order remainder
  //   r(t) = -i eps cos(w t) (a+ e^{i w t} + a- e^{-i w t});
  // this holds as an algebraic identity of the coefficient formulas, so the
  // two sides must agree to roundoff, not merely to O(eps^2).
  const auto d = drive(1e3, 1e5, 1e2, 1e3, 2e4);
  const auto c = bloch::pss_coefficients(d);
  const double w = d.mech_frequency_rad_s;
  const double noise = 1e-11 * std::abs(d.complex_detuning()) * std::abs(c.a0);
  for (double t : {0.0, 1.3e-5, 7.9e-5, 2.2e-4}) {
    const cplx ep = std::exp(kI * (w * t));
    const cplx em = 1.0 / ep;
    const cplx rho = c.a0 + c.a_plus * ep + c.a_minus * em;
    const cplx drho = kI * w * (c.a_plus * ep - c.a_minus * em);
    const double delta = d.detuning_rad_s + d.modulation_rad_s * std::cos(w * t);
    const cplx r =
        drho - ((kI * delta - 0.5 * d.decay_rad_s) * rho + kI * (0.5 * d.rabi_rad_s));
    const cplx remainder = -kI * d.modulation_rad_s * std::cos(w * t) *
                           (c.a_plus * ep + c.a_minus * em);
    CHECK(std::abs(r - remainder) < noise);
  }
}

TEST_CASE("PSS structure: exact a0, sidebands, period average, evaluation") {
  const auto d = drive(1e3, 1e5, 1e2, 1e3, 2e4);
  const auto c = bloch::pss_coefficients(d);
  CHECK(c.a0 == bloch::steady_state_coherence(d));

  // the +omega_M sideband sits closer to the pole than the -omega_M one
  CHECK(std::abs(c.a_plus) > std::abs(c.a_minus));

  // pss_coherence(t) is the coefficient sum
  for (double t : {0.0, 3.7e-5, 1.9e-4}) {
    const double phase = d.mech_frequency_rad_s * t;
    const cplx sum = c.a0 + c.a_plus * std::exp(kI * phase) +
                     c.a_minus * std::exp(-kI * phase);
    CHECK(std::abs(bloch::pss_coherence(d, t) - sum) < 1e-13 * std::abs(c.a0));
  }

  // the orbit averages to a0 over one period (trapezoid is spectrally
  // exact for pure harmonics on a uniform full-period grid)
  const double period = kTwoPi / d.mech_frequency_rad_s;
  const int n = 4096;
  cplx avg = 0.0;
  for (int i = 0; i < n; ++i) {
    avg += bloch::pss_coherence(d, period * i / n);
  }
  avg /= static_cast<double>(n);
  CHECK(std::abs(avg - c.a0) < 1e-12 * std::abs(c.a0));
}

TEST_CASE("PSS is linear in the Rabi frequency") {
  const auto d1 = drive(1e3, 1e5, 1e2, 1e3, 2e4);
  auto d2 = d1;
  d2.rabi_rad_s *= 2.0;
  const auto c1 = bloch::pss_coefficients(d1);
  const auto c2 = bloch::pss_coefficients(d2);
  CHECK(c2.a0 == 2.0 * c1.a0);
  CHECK(c2.a_plus == 2.0 * c1.a_plus);
  CHECK(c2.a_minus == 2.0 * c1.a_minus);
}

TEST_CASE("adiabatic follow matches the PSS deep in the slow regime") {
  // omega/delta = 1e-2, Gamma/delta = 1e-4, eps/delta = 1e-3: every term
  // separating the two forms is at or below 5e-5 relative
  const auto d = drive(1e3, 1e6, 1e2, 1e3, 1e4);
  const double scale = std::abs(bloch::steady_state_coherence(d));
  const double period = kTwoPi / d.mech_frequency_rad_s;
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double t = period * i / 200.0;
    worst = std::max(worst, std::abs(bloch::adiabatic_coherence(d, t) -
                                     bloch::pss_coherence(d, t)));
  }
  CHECK(worst / scale < 1e-3);
}

TEST_CASE("adiabatic form refuses a modulation that reaches the detuning") {
  CHECK_THROWS_AS(bloch::adiabatic_coherence(drive(1e3, 1e5, 1e2, 1e5, 2e4), 0.0),
                  ZeroDetuningError);
  CHECK_THROWS_AS(bloch::adiabatic_coherence(drive(1e3, 1e5, 1e2, 1.2e5, 2e4), 0.0),
                  ZeroDetuningError);
  CHECK_NOTHROW(bloch::adiabatic_coherence(drive(1e3, 1e5, 1e2, 0.99e5, 2e4), 0.0));
}

TEST_CASE("integrator reproduces the exact unmodulated relaxation") {
  const auto d = drive(1e3, 1e5, 1e2, 0.0, 2e4);
  const double period = kTwoPi / d.mech_frequency_rad_s;
  bloch::IntegrationOptions opts;
  opts.start = bloch::BlochStart::kZero;
  opts.steps_per_period = 2000;
  const auto traj = bloch::integrate_bloch(d, 2.0 * period, opts);
  const cplx expect = exact_unmodulated(d, {0.0, 0.0}, traj.t_s.back());
  const double scale = std::abs(bloch::steady_state_coherence(d));
  CHECK(std::abs(traj.rho.back() - expect) < 1e-7 * scale);
  CHECK(traj.t_s.front() == 0.0);
  CHECK(traj.rho.front() == cplx{0.0, 0.0});
}

TEST_CASE("integrator converges at fourth order") {
  const auto d = drive(1e3, 1e5, 1e2, 0.0, 2e4);
  const double period = kTwoPi / d.mech_frequency_rad_s;
  double err[3];
  const int spp[3] = {126, 252, 504};
  for (int i = 0; i < 3; ++i) {
    bloch::IntegrationOptions opts;
    opts.start = bloch::BlochStart::kZero;
    opts.steps_per_period = spp[i];
    opts.record_stride = spp[i];
    const auto traj = bloch::integrate_bloch(d, 2.0 * period, opts);
    err[i] = std::abs(traj.rho.back() - exact_unmodulated(d, {0.0, 0.0}, traj.t_s.back()));
  }
  const double order1 = std::log2(err[0] / err[1]);
  const double order2 = std::log2(err[1] / err[2]);
  CHECK(order1 > 3.8);
  CHECK(order1 < 4.5);
  CHECK(order2 > 3.8);
  CHECK(order2 < 4.5);
}

TEST_CASE("integrator tracks the PSS orbit to second order in eps") {
  const auto d = drive(1e3, 1e5, 1e2, 3e3, 2e4);  // eps/delta = 0.03
  const auto dev = bloch::pss_deviation_scan(d, 10, 3200);
  const double ratio = d.modulation_rad_s / d.detuning_rad_s;
  CHECK(dev.relative <= 5.0 * ratio * ratio);
  CHECK(dev.scale == rel(std::abs(bloch::steady_state_coherence(d)), 1e-15));
  CHECK(dev.max_abs_deviation == rel(dev.relative * dev.scale, 1e-12));
}

TEST_CASE("deviation scan detects an unstable step instead of reporting junk") {
  // |delta_bar| * h = 3.14 sits outside the RK4 stability region
  const auto d = drive(1e3, 1e7, 1e2, 1e4, 2e4);
  CHECK_THROWS_AS(bloch::pss_deviation_scan(d, 10, 1000), NonConvergentError);
}

TEST_CASE("periodic residual: honest transient reporting and convergence") {
  const double period = kTwoPi / 2e4;

  // slow decay: two periods cannot be periodic yet
  const auto slow = drive(1e3, 1e5, 1e2, 1e3, 2e4);
  bloch::IntegrationOptions opts;
  opts.start = bloch::BlochStart::kZero;
  opts.steps_per_period = 1000;
  auto traj = bloch::integrate_bloch(slow, 2.0 * period, opts);
  CHECK_FALSE(traj.converged);
  CHECK(traj.periodic_residual > tol::kPeriodicResidualRel);

  opts.require_periodic_convergence = true;
  CHECK_THROWS_AS(bloch::integrate_bloch(slow, 2.0 * period, opts), NonConvergentError);

  // fast decay: by 20 periods the transient is e^{-31} of its start
  const auto fast = drive(1e3, 1e5, 1e4, 1e3, 2e4);
  traj = bloch::integrate_bloch(fast, 20.0 * period, opts);
  CHECK(traj.converged);
  CHECK(traj.periodic_residual <= tol::kPeriodicResidualRel);
}

TEST_CASE("fewer than two integrated periods yields a NaN residual") {
  const auto d = drive(1e3, 1e5, 1e4, 1e3, 2e4);
  const double period = kTwoPi / d.mech_frequency_rad_s;
  const auto traj = bloch::integrate_bloch(d, 1.2 * period);
  CHECK(std::isnan(traj.periodic_residual));
  CHECK_FALSE(traj.converged);
}

TEST_CASE("option and drive validation") {
  const auto d = drive(1e3, 1e5, 1e2, 1e3, 2e4);
  const double period = kTwoPi / d.mech_frequency_rad_s;

  bloch::IntegrationOptions opts;
  opts.steps_per_period = 99;
  CHECK_THROWS_AS(bloch::integrate_bloch(d, period, opts), ValidationError);

  opts = {};
  opts.record_stride = 0;
  CHECK_THROWS_AS(bloch::integrate_bloch(d, period, opts), ValidationError);

  opts = {};
  opts.require_periodic_convergence = true;
  CHECK_THROWS_AS(bloch::integrate_bloch(d, 1.5 * period, opts), ValidationError);

  CHECK_THROWS_AS(bloch::integrate_bloch(d, 0.0), ValidationError);

  auto bad = d;
  bad.decay_rad_s = 0.0;  // undamped pole: no steady state exists
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = d;
  bad.mech_frequency_rad_s = 0.0;  // legal drive, but no period to step over
  CHECK_NOTHROW(bad.validate());
  CHECK_THROWS_AS(bloch::integrate_bloch(bad, 1e-3), ValidationError);
  CHECK_THROWS_AS(bloch::pss_coefficients(bad), ValidationError);
}

TEST_CASE("record stride keeps endpoints and grid alignment") {
  const auto d = drive(1e3, 1e5, 1e2, 1e3, 2e4);
  const double period = kTwoPi / d.mech_frequency_rad_s;
  bloch::IntegrationOptions opts;
  opts.steps_per_period = 1000;
  opts.record_stride = 333;
  const auto traj = bloch::integrate_bloch(d, 2.0 * period, opts);
  CHECK(traj.t_s.front() == 0.0);
  CHECK(traj.t_s.back() == rel(2.0 * period, 1e-12));
  for (size_t i = 1; i < traj.t_s.size(); ++i) {
    CHECK(traj.t_s[i] > traj.t_s[i - 1]);
  }
}

TEST_CASE("regime diagnostics for the worked-example edge drive") {
  const auto d = drive(86770774.4823672, 18849555.92153876, 766.5486074759095,
                       93335.30048771971, 5592034.923389832);
  const auto report = bloch::regime_check(d);
  REQUIRE(report.entries.size() == 3);
  CHECK(report.entries[0].name == "adiabaticity");
  CHECK(report.entries[0].value == rel(0.08801111107472338, 1e-9));
  CHECK(report.entries[0].verdict == "pass");
  CHECK(report.entries[1].name == "decoherence");
  CHECK(report.entries[1].value == rel(4.066666666666667e-5, 1e-9));
  CHECK(report.entries[1].verdict == "pass");
  CHECK(report.entries[2].name == "excitation");
  CHECK(report.entries[2].value == rel(4.603332558260279, 1e-9));
  CHECK(report.entries[2].verdict == "fail");
  CHECK(report.any_fail);
  CHECK_FALSE(report.any_warn);
}
