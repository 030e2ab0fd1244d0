#include "holeprobe/holeburn.hpp"

#include <cmath>
#include <string>

namespace holeprobe::holeburn {

std::array<BurnStep, 2> burn_schedule(const BurnSpec& b) {
  b.validate();
  const double nu0 = b.center_frequency_hz;
  const double d = b.half_width_hz;
  BurnStep s1{+b.gradient_t_per_m, {nu0 - d, nu0 + 3.0 * d}};
  BurnStep s2{-b.gradient_t_per_m, {nu0 - 3.0 * d, nu0 + d}};
  return {s1, s2};
}

HoleEdges hole_edges(double x_m, const BurnSpec& b) {
  const double half = b.thickness_m / 2.0;
  if (!(std::abs(x_m) <= half)) {
    throw ValidationError("hole_edges: |x| exceeds e/2");
  }
  const double grad_shift = b.zeeman_hz_per_t * x_m * b.gradient_t_per_m;
  const double smear = b.strain_hz_per_m2 * std::abs(x_m) * b.smear_amplitude_m;
  HoleEdges e;
  e.ell_l_hz = -3.0 * b.half_width_hz + grad_shift - smear;
  e.ell_r_hz = 3.0 * b.half_width_hz - grad_shift + smear;
  if (!(e.ell_l_hz < e.ell_r_hz)) {
    throw EdgeCrossingError("hole collapsed at x = " + std::to_string(x_m) +
                            " m: ell_L >= ell_R");
  }
  return e;
}

bool is_dark(double x_m, double detuning0_hz, const BurnSpec& b) {
  const double half = b.thickness_m / 2.0;
  if (!(std::abs(x_m) <= half)) {
    throw ValidationError("is_dark: |x| exceeds e/2");
  }
  const double g_shift = b.zeeman_hz_per_t * x_m * b.gradient_t_per_m;
  const double smear = b.strain_hz_per_m2 * std::abs(x_m) * b.smear_amplitude_m;
  const double d = b.half_width_hz;
  // shifted ion frequency must have fallen inside the widened scan of
  // either step; detuning0 is relative to nu0 already
  const bool step1 = detuning0_hz >= -d - g_shift - smear &&
                     detuning0_hz <= 3.0 * d - g_shift + smear;
  const bool step2 = detuning0_hz >= -3.0 * d + g_shift - smear &&
                     detuning0_hz <= d + g_shift + smear;
  return step1 || step2;
}

HoleProfile hole_profile(const BurnSpec& b, double displacement_m, int n_samples) {
  b.validate();
  if (n_samples < 2) {
    throw ValidationError("hole_profile: n_samples must be >= 2");
  }
  const double half = b.thickness_m / 2.0;
  HoleProfile p;
  p.samples.reserve(static_cast<size_t>(n_samples));
  for (int i = 0; i < n_samples; ++i) {
    const double x = -half + b.thickness_m * static_cast<double>(i) /
                                static_cast<double>(n_samples - 1);
    const HoleEdges e = hole_edges(x, b);
    const double bend = b.strain_hz_per_m2 * x * displacement_m;
    p.samples.push_back({x, e.ell_l_hz + bend, e.ell_r_hz + bend});
  }
  return p;
}

double gradient_matching_ratio(const BurnSpec& b) {
  return std::abs(b.zeeman_hz_per_t * (b.thickness_m / 2.0) * b.gradient_t_per_m) /
         b.half_width_hz;
}

}  // namespace holeprobe::holeburn
