#include "holeprobe/coupling.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>

#include "holeprobe/constants.hpp"
#include "holeprobe/holeburn.hpp"

namespace holeprobe::coupling {

namespace {

using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;

// Shifted edges never reaching the carrier means, per linear piece,
// strict sign conditions at the piece endpoints.
void check_edges_clear_carrier(const BurnSpec& b, double X) {
  const double half = b.thickness_m / 2.0;
  const double k = b.strain_hz_per_m2;
  for (double x : {-half, 0.0, half}) {
    const holeburn::HoleEdges e = holeburn::hole_edges(x, b);
    const double bend = k * x * X;
    if (!(e.ell_l_hz + bend < 0.0) || !(e.ell_r_hz + bend > 0.0)) {
      char buf[128];
      std::snprintf(buf, sizeof(buf),
                    "displaced hole edge reaches the carrier at x = %g m (X = %g m)",
                    x, X);
      throw EdgeTouchesCarrierError(buf);
    }
  }
}

double integrate_half(const std::function<double(double)>& f, double lo, double hi,
                      const QuadratureOptions& opts) {
  double err = 0.0, l1 = 0.0;
  const double val = Quad::integrate(f, lo, hi,
                                     static_cast<unsigned>(opts.max_depth),
                                     opts.rel_tol, &err, &l1);
  if (!std::isfinite(val)) {
    throw QuadratureFailure("interaction integral produced a non-finite value");
  }
  // err is an absolute estimate; the integrand is single-signed per half,
  // so l1 is the natural scale
  const double scale = std::max(l1, std::numeric_limits<double>::min());
  if (err > 1e3 * opts.rel_tol * scale) {
    throw QuadratureFailure(
        "interaction integral tolerance unmet under the subdivision cap");
  }
  return val;
}

double intensity_scale(const BurnSpec& b, double n, const ProbeSpec& probe,
                       double gamma_rad_s) {
  b.validate();
  probe.validate();
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw ValidationError("spectral density must be finite and >= 0");
  }
  return n * scattering_cross_section(probe.wavelength_m, gamma_rad_s) *
         probe.intensity_w_per_m2();
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kNumeric: return "numeric";
    case Method::kClosed: return "closed";
    case Method::kLowT: return "lowt";
  }
  return "?";
}

double scattering_cross_section(double wavelength_m, double gamma_rad_s) {
  return wavelength_m * wavelength_m * wavelength_m * gamma_rad_s /
         (16.0 * kPi * kPi * kSpeedOfLight);
}

double carrier_angular_frequency(double wavelength_m) {
  return kTwoPi * kSpeedOfLight / wavelength_m;
}

double probe_rabi_frequency(const ProbeSpec& probe, double gamma_rad_s) {
  probe.validate();
  const double s0 = scattering_cross_section(probe.wavelength_m, gamma_rad_s);
  return std::sqrt(8.0 * kPi * s0 * probe.intensity_w_per_m2() / kHbar);
}

double per_ion_phase(double detuning_hz, const ProbeSpec& probe, double gamma_rad_s) {
  probe.validate();
  if (detuning_hz == 0.0) {
    throw ZeroDetuningError("per-ion phase requested on resonance");
  }
  const double l2 = probe.wavelength_m * probe.wavelength_m;
  return -(l2 * gamma_rad_s) / (8.0 * kPi * probe.cross_section_m2) / detuning_hz;
}

double per_ion_stark(double detuning_hz, const ProbeSpec& probe, double gamma_rad_s) {
  probe.validate();
  if (detuning_hz == 0.0) {
    throw ZeroDetuningError("per-ion light shift requested on resonance");
  }
  return scattering_cross_section(probe.wavelength_m, gamma_rad_s) *
         probe.intensity_w_per_m2() / detuning_hz;
}

bool dispersive_regime_ok(double detuning_hz, double gamma_rad_s) {
  return gamma_rad_s < tol::kRegimePass * std::abs(kTwoPi * detuning_hz);
}

double v_numeric(double X, const BurnSpec& b, double n, const ProbeSpec& probe,
                 double gamma_rad_s, const QuadratureOptions& opts) {
  const double pref = intensity_scale(b, n, probe, gamma_rad_s);
  check_edges_clear_carrier(b, X);
  const double half = b.thickness_m / 2.0;
  const double k = b.strain_hz_per_m2;

  std::optional<double> half_support;
  if (opts.support_cutoff_hz) {
    const double m = *opts.support_cutoff_hz / 2.0;
    for (double x : {-half, 0.0, half}) {
      const holeburn::HoleEdges e = holeburn::hole_edges(x, b);
      if (m <= std::max(std::abs(e.ell_l_hz + k * x * X), e.ell_r_hz + k * x * X)) {
        throw ValidationError(
            "support cutoff must exceed every displaced hole edge");
      }
    }
    half_support = m;
  }

  // Integrate in u = x / (e/2): the quadrature's error bookkeeping degrades
  // on intervals far from unit length, and u keeps each piece at length 1.
  const auto integrand = [&](double u) {
    const double x = u * half;
    const holeburn::HoleEdges e = holeburn::hole_edges(x, b);
    const double bend = k * x * X;
    const double num = -(e.ell_l_hz + bend);  // > 0 by the carrier check
    const double den = e.ell_r_hz + bend;     // > 0
    if (!half_support) return std::log(num / den);
    // finite symmetric support: the cutoff terms cancel analytically but
    // are kept explicit so the variant reports its own roundoff
    return std::log(num / *half_support) + std::log(*half_support / den);
  };

  // split at the smear kink u = 0; each piece is a log of an affine map
  const double left = integrate_half(integrand, -1.0, 0.0, opts);
  const double right = integrate_half(integrand, 0.0, 1.0, opts);
  return pref * half * (left + right);
}

double v_closed(double X, const BurnSpec& b, double n, const ProbeSpec& probe,
                double gamma_rad_s, bool allow_degenerate_limit) {
  const double pref = intensity_scale(b, n, probe, gamma_rad_s);
  const double k = b.strain_hz_per_m2;
  const double e = b.thickness_m;
  const double delta = b.half_width_hz;
  const double G = b.zeeman_hz_per_t * b.gradient_t_per_m;  // g*gradB
  const double S = k * b.smear_amplitude_m;                 // k*Xbar

  if (G == 0.0 && S == 0.0) return 0.0;  // rectangular hole: odd integrand

  const double u = G - S;
  const double v = G + S;
  const double tu = u * e / (6.0 * delta);
  const double tv = v * e / (6.0 * delta);
  if (tv <= -1.0 || tu >= 1.0) {
    throw LogDomainError("closed-form log argument left its domain "
                         "(edge sweeps through the carrier)");
  }

  const double amp = 2.0 * k * X * pref;

  if (std::abs(u) < tol::kDegenerateRelTol * std::abs(G)) {
    if (!allow_degenerate_limit) {
      throw GradientSmearDegenerateError(
          "k*Xbar approaches g*gradB; request the analytic limit explicitly");
    }
    // removable limit u -> 0 of term1 + term3, expanded through u^2
    const double f = e / (2.0 * v) - e * e / (24.0 * delta) -
                     u * e * e * e / (216.0 * delta * delta) -
                     u * u * e * e * e * e / (1728.0 * delta * delta * delta) -
                     (3.0 * delta / (v * v)) * std::log1p(tv);
    return amp * f;
  }

  const double term1 = G * e / ((G - S) * (G + S));
  const double term2 = -(3.0 * delta / (v * v)) * std::log1p(tv);
  const double term3 = (3.0 * delta / (u * u)) * std::log1p(-tu);
  return amp * (term1 + term2 + term3);
}

double v_low_t(double X, const BurnSpec& b, double n, const ProbeSpec& probe,
               double gamma_rad_s) {
  const double pref = intensity_scale(b, n, probe, gamma_rad_s);
  const double e = b.thickness_m;
  const double delta = b.half_width_hz;
  const double G = b.zeeman_hz_per_t * b.gradient_t_per_m;
  return -b.strain_hz_per_m2 * X * pref * G * e * e * e /
         (54.0 * delta * delta);
}

double dvdx0(const BurnSpec& b, double n, const ProbeSpec& probe,
             double gamma_rad_s, Method method, std::optional<double> fd_step_m) {
  switch (method) {
    case Method::kLowT:
      return v_low_t(1.0, b, n, probe, gamma_rad_s);
    case Method::kClosed:
      return v_closed(1.0, b, n, probe, gamma_rad_s);
    case Method::kNumeric: {
      const double k = b.strain_hz_per_m2;
      if (k == 0.0) return 0.0;  // V is identically 0 without strain coupling
      const double h = fd_step_m.value_or(
          tol::kFdStepFraction * b.half_width_hz / (k * b.thickness_m / 2.0));
      const double vp = v_numeric(h, b, n, probe, gamma_rad_s);
      const double vm = v_numeric(-h, b, n, probe, gamma_rad_s);
      return (vp - vm) / (2.0 * h);
    }
  }
  throw ValidationError("unknown coupling method");
}

double static_displacement(double dvdx0_j_per_m, const model::MechanicsDerived& mech) {
  return -dvdx0_j_per_m / mech.spring_n_per_m;
}

double carrier_phase(double v_j, const ProbeSpec& probe) {
  probe.validate();
  return v_j * carrier_angular_frequency(probe.wavelength_m) / probe.power_w;
}

CouplingResult evaluate_coupling(const BurnSpec& b, double n, const ProbeSpec& probe,
                                 double gamma_rad_s,
                                 const model::MechanicsDerived& mech, Method method,
                                 std::optional<double> eval_displacement,
                                 const QuadratureOptions& opts) {
  CouplingResult r;
  r.method = method;
  r.dvdx0_j_per_m = dvdx0(b, n, probe, gamma_rad_s, method);
  r.x_disp_m = static_displacement(r.dvdx0_j_per_m, mech);
  const double X = eval_displacement.value_or(r.x_disp_m);
  switch (method) {
    case Method::kNumeric:
      r.v_j = v_numeric(X, b, n, probe, gamma_rad_s, opts);
      break;
    case Method::kClosed:
      r.v_j = v_closed(X, b, n, probe, gamma_rad_s);
      break;
    case Method::kLowT:
      r.v_j = v_low_t(X, b, n, probe, gamma_rad_s);
      break;
  }
  r.carrier_phase_rad = carrier_phase(r.v_j, probe);
  return r;
}

}  // namespace holeprobe::coupling
