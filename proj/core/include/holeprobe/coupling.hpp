#pragma once

// Dispersive probe-resonator coupling through the burnt hole.
//
// A single ion at detuning d (Hz) imprints the phase
//     dphi = -(lambda^2 Gamma) / (8 pi A) * (1 / d)
// and experiences the light shift V_ion = sigma0 * I / d with
// sigma0 = lambda^3 Gamma / (16 pi^2 c); the two are tied by
// V_ion = -hbar * R * dphi with the photon rate R = I A / (hbar omega0).
//
// Summing the shift over all remaining (bright) ions with the hole edges
// displaced by k*x*X gives the probe-induced potential
//     V(X) = n sigma0 I Int_{-e/2}^{e/2} ln( |ell_L + k x X| / (ell_R + k x X) ) dx,
// where the logarithm is the symmetric-cutoff regularization of the pair
// of divergent 1/d integrals (the cutoff cancels exactly). v_closed is the
// first order of V in k*x*X integrated in closed form; v_low_t is its
// third-order small-(g gradB e / 6 Delta) limit
//     V(X) = -k X n sigma0 I * g gradB e^3 / (54 Delta^2).

#include <optional>

#include "holeprobe/constants.hpp"
#include "holeprobe/model.hpp"
#include "holeprobe/specs.hpp"

namespace holeprobe::coupling {

enum class Method { kNumeric, kClosed, kLowT };

const char* method_name(Method m);

struct CouplingResult {
  double v_j = 0.0;                // V at the evaluated displacement
  double dvdx0_j_per_m = 0.0;      // dV/dX at X = 0
  double x_disp_m = 0.0;           // -dVdX0 / (m_eff omega_M^2)
  double carrier_phase_rad = 0.0;  // V * omega0 / (I A)
  Method method = Method::kClosed;
};

struct QuadratureOptions {
  double rel_tol = tol::kQuadratureRelTol;
  int max_depth = tol::kQuadratureMaxDepth;
  // finite inhomogeneous support: integrate d over [-cutoff/2, cutoff/2]
  // instead of the full line. Symmetric cutoffs cancel analytically, so
  // this is a sensitivity knob, not a physics change.
  std::optional<double> support_cutoff_hz;
};

// sigma0 = lambda^3 Gamma / (16 pi^2 c)
double scattering_cross_section(double wavelength_m, double gamma_rad_s);

// omega0 = 2 pi c / lambda
double carrier_angular_frequency(double wavelength_m);

// Rabi frequency (rad/s) consistent with the single-Gamma light shift:
// hbar Omega^2 / (4 * 2 pi d) == sigma0 I / d.
double probe_rabi_frequency(const ProbeSpec& probe, double gamma_rad_s);

double per_ion_phase(double detuning_hz, const ProbeSpec& probe, double gamma_rad_s);
double per_ion_stark(double detuning_hz, const ProbeSpec& probe, double gamma_rad_s);

// |2 pi d| >> Gamma check used for report warnings.
bool dispersive_regime_ok(double detuning_hz, double gamma_rad_s);

// V(X) by adaptive quadrature of the exact integrand. Throws
// EdgeTouchesCarrierError if a displaced edge reaches zero detuning
// anywhere across the thickness, QuadratureFailure if the tolerance is
// unmet under the subdivision cap.
double v_numeric(double displacement_m, const BurnSpec& b, double spectral_density,
                 const ProbeSpec& probe, double gamma_rad_s,
                 const QuadratureOptions& opts = {});

// Closed-form first order in k*x*X. The denominators degenerate when
// k*Xbar approaches g*gradB; within tol::kDegenerateRelTol this throws
// GradientSmearDegenerateError unless allow_degenerate_limit selects the
// series continuation of the removable limit.
double v_closed(double displacement_m, const BurnSpec& b, double spectral_density,
                const ProbeSpec& probe, double gamma_rad_s,
                bool allow_degenerate_limit = false);

double v_low_t(double displacement_m, const BurnSpec& b, double spectral_density,
               const ProbeSpec& probe, double gamma_rad_s);

// dV/dX at X = 0 for the chosen route; kNumeric uses a central difference
// with step fd_step_m (default tol::kFdStepFraction * Delta / (k e/2)).
double dvdx0(const BurnSpec& b, double spectral_density, const ProbeSpec& probe,
             double gamma_rad_s, Method method,
             std::optional<double> fd_step_m = std::nullopt);

// X_disp = -dVdX0 / (m_eff omega_M^2)
double static_displacement(double dvdx0_j_per_m, const model::MechanicsDerived& mech);

// carrier phase = V * omega0 / (I A) = V * omega0 / P
double carrier_phase(double v_j, const ProbeSpec& probe);

// Full chain: dV/dX -> X_disp -> V -> carrier phase. eval_displacement
// overrides the self-consistent X_disp as the point where V is evaluated.
CouplingResult evaluate_coupling(const BurnSpec& b, double spectral_density,
                                 const ProbeSpec& probe, double gamma_rad_s,
                                 const model::MechanicsDerived& mech, Method method,
                                 std::optional<double> eval_displacement = std::nullopt,
                                 const QuadratureOptions& opts = {});

}  // namespace holeprobe::coupling
