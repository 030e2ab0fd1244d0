#pragma once

// Functionalized two-step hole burning.
//
// Step 1 burns [nu0 - Delta, nu0 + 3 Delta] under +gradB, step 2 burns
// [nu0 - 3 Delta, nu0 + Delta] under -gradB. An ion at fiber offset x and
// static detuning d0 is shifted by g*x*gradB during each step; residual
// motion of amplitude Xbar smears each burnt interval by k*|x|*Xbar on
// both sides. Where the step-1 condition |g*(e/2)*gradB| <= Delta holds,
// the union of the two burnt ranges is the single window
// [ell_L(x), ell_R(x)] used by the interaction integral.
//
// All frequencies here are detunings from nu0, in Hz.

#include <array>
#include <vector>

#include "holeprobe/specs.hpp"

namespace holeprobe::holeburn {

struct BurnStep {
  double gradient_t_per_m = 0.0;            // bias applied during the scan
  std::array<double, 2> scan_interval_hz{}; // [low, high] about nu0, width 4*Delta
};

// The two-step schedule; steps are returned in burn order.
std::array<BurnStep, 2> burn_schedule(const BurnSpec& b);

struct HoleEdges {
  double ell_l_hz = 0.0;  // < 0
  double ell_r_hz = 0.0;  // > 0
};

// Edge functions at fiber offset x, |x| <= e/2. Throws EdgeCrossingError
// if the window has collapsed (possible only when BurnSpec::validate was
// bypassed).
HoleEdges hole_edges(double x_m, const BurnSpec& b);

// True iff an ion at (x, d0) is transferred by either burn step. Uses the
// per-step union directly, so it stays meaningful even for exotic specs.
bool is_dark(double x_m, double detuning0_hz, const BurnSpec& b);

struct HoleProfileSample {
  double x_m = 0.0;
  double ell_l_hz = 0.0;
  double ell_r_hz = 0.0;
};

struct HoleProfile {
  std::vector<HoleProfileSample> samples;  // ascending in x
};

// Edge profile across the thickness with the window rigidly shifted by the
// probe-time displacement X: edges at x map to ell +/- k*x*X. n_samples >= 2,
// uniform in x over [-e/2, e/2].
HoleProfile hole_profile(const BurnSpec& b, double displacement_m, int n_samples);

// |g*(e/2)*gradB| / Delta: 1 at the coupling-maximizing operating point,
// <= 1 for any valid burn.
double gradient_matching_ratio(const BurnSpec& b);

}  // namespace holeprobe::holeburn
