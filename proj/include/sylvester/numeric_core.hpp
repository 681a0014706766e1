#pragma once

// Complex kernels with fixed branch-cut and cancellation policies.
//
// Branch convention: arg(z) lies in (-pi, pi]; a zero imaginary part is
// always read as +0, so -8 - 0i and -8 + 0i share the cut's upper side.

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "sylvester/complex.hpp"

namespace sylvester {

/// The primitive cube roots of unity, omega = e^{2 pi i / 3}.
struct UnityRoots {
  static constexpr Complex omega{-0.5, std::numbers::sqrt3 / 2.0};
  static constexpr Complex omega_sq{-0.5, -std::numbers::sqrt3 / 2.0};
};

namespace detail {

// Principal argument with -0 imaginary parts folded onto +0.
inline double principal_arg(Complex z) noexcept {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return std::atan2(im, z.real());
}

}  // namespace detail

/// Principal cube root: |w| = cbrt|z| and arg(w) = arg(z) / 3, so
/// arg(w) lies in (-pi/3, pi/3]. Negative reals map to the complex root at
/// arg pi/3, not to the real root.
inline Complex principal_cube_root(Complex z) {
  require_finite(z, "principal_cube_root argument");
  if (z.real() == 0.0 && z.imag() == 0.0) return {0.0, 0.0};
  if (z.imag() == 0.0) {
    const double m = std::cbrt(std::abs(z.real()));
    if (z.real() > 0.0) return {m, 0.0};
    return {0.5 * m, m * (std::numbers::sqrt3 / 2.0)};
  }

  const double theta = detail::principal_arg(z) / 3.0;
  const Complex w = std::polar(std::cbrt(std::abs(z)), theta);

  // One Newton step written as (2w + z/w^2)/3 so w^3 is never formed.
  const Complex refined = (2.0 * w + z / (w * w)) / 3.0;
  const double refined_arg = std::arg(refined);
  constexpr double third_pi = std::numbers::pi / 3.0;
  if (!is_finite(refined) || refined_arg > third_pi || refined_arg <= -third_pi) {
    return w;
  }
  return refined;
}

/// {w, w*omega, w*omega^2} with w the principal cube root, in that order.
inline std::array<Complex, 3> all_cube_roots(Complex z) {
  const Complex w = principal_cube_root(z);
  return {w, w * UnityRoots::omega, w * UnityRoots::omega_sq};
}

/// Roots of x^2 + b x + c.
///
/// The sign-matched root u = -(b + sign * sqrt(b^2 - 4c)) / 2 is computed
/// first; the other root is c / u. Returned as (c / u, u), i.e. the
/// smaller-magnitude root first. Inputs are rescaled by the power of two
/// nearest max(|b|, sqrt|c|), which is exact and keeps b^2 from overflowing.
inline std::pair<Complex, Complex> solve_monic_quadratic(Complex b, Complex c) {
  require_finite(b, "quadratic coefficient b");
  require_finite(c, "quadratic coefficient c");

  const double magnitude = std::max(std::abs(b), std::sqrt(std::abs(c)));
  if (magnitude == 0.0) return {Complex{}, Complex{}};
  const double scale = std::ldexp(1.0, std::ilogb(magnitude));

  const Complex bs = b / scale;
  const Complex cs = (c / scale) / scale;
  Complex d = std::sqrt(bs * bs - 4.0 * cs);
  if ((std::conj(bs) * d).real() < 0.0) d = -d;

  const Complex big = -0.5 * (bs + d);
  if (big == Complex{}) return {Complex{}, Complex{}};
  const Complex small = cs / big;
  return {small * scale, big * scale};
}

}  // namespace sylvester
