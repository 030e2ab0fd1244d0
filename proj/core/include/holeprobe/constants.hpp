#pragma once

// Physical constants, SI (CODATA 2018 exact values where defined).

namespace holeprobe {

inline constexpr double kHbar = 1.054'571'817e-34;       // J s
inline constexpr double kBoltzmann = 1.380'649e-23;      // J/K
inline constexpr double kSpeedOfLight = 299'792'458.0;   // m/s

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// ============================================================
// Numerical policy knobs. These are the single source of truth
// for every tolerance that is not pinned by a physics formula.
// ============================================================

namespace tol {

// interaction integral: adaptive quadrature over the thickness coordinate
inline constexpr double kQuadratureRelTol = 1e-10;
inline constexpr int kQuadratureMaxDepth = 15;

// |g gradB - k Xbar| below this fraction of g gradB counts as degenerate
// for the closed-form denominators
inline constexpr double kDegenerateRelTol = 1e-6;

// central-difference step for dV/dX at X=0, as a fraction of the
// detuning headroom Delta / (k e/2)
inline constexpr double kFdStepFraction = 1e-3;

// periodic-steady-state convergence: residual bound relative to |a0|
inline constexpr double kPeriodicResidualRel = 1e-8;

// regime diagnostics verdict thresholds
inline constexpr double kRegimePass = 0.1;
inline constexpr double kRegimeWarn = 0.5;

}  // namespace tol

}  // namespace holeprobe
