#pragma once

#include <array>
#include <cmath>

#include "sylvester/complex.hpp"

namespace sylvester {

/// Monic cubic written with binomial weights: x^3 + 3 a1 x^2 + 3 a2 x + a3.
struct GeneralCubic {
  Complex a1;
  Complex a2;
  Complex a3;

  friend bool operator==(const GeneralCubic&, const GeneralCubic&) = default;
};

/// Reduced cubic f(x) = x^3 - 3 p x + q.
struct ReducedCubic {
  Complex p;
  Complex q;

  friend bool operator==(const ReducedCubic&, const ReducedCubic&) = default;
};

/// Result of depressing a GeneralCubic. A root y of `reduced` maps to the
/// root y - shift of the original.
struct DepressionRecord {
  ReducedCubic reduced;
  Complex shift;
};

inline void require_finite(const GeneralCubic& g) {
  require_finite(g.a1, "a1");
  require_finite(g.a2, "a2");
  require_finite(g.a3, "a3");
}

inline void require_finite(const ReducedCubic& rc) {
  require_finite(rc.p, "p");
  require_finite(rc.q, "q");
}

/// Maps A x^3 + B x^2 + C x + D onto the binomial convention.
inline GeneralCubic normalize(Complex c3, Complex c2, Complex c1, Complex c0) {
  require_finite(c3, "leading coefficient");
  require_finite(c2, "x^2 coefficient");
  require_finite(c1, "x coefficient");
  require_finite(c0, "constant coefficient");
  if (std::abs(c3) == 0.0) throw DegenerateLeadingCoefficient();

  const Complex three_lead = 3.0 * c3;
  GeneralCubic g{c2 / three_lead, c1 / three_lead, c0 / c3};
  require_finite(g);
  return g;
}

/// Substitutes x -> x - a1, which removes the quadratic term:
///   p = a1^2 - a2,  q = 2 a1^3 - 3 a1 a2 + a3.
inline DepressionRecord depress(const GeneralCubic& g) {
  require_finite(g);
  const Complex a1 = g.a1;
  const Complex a1_sq = a1 * a1;
  const Complex p = a1_sq - g.a2;
  const Complex q = 2.0 * a1_sq * a1 - 3.0 * a1 * g.a2 + g.a3;
  return {{p, q}, a1};
}

inline std::array<Complex, 3> lift_roots(const std::array<Complex, 3>& roots,
                                         Complex shift) {
  return {roots[0] - shift, roots[1] - shift, roots[2] - shift};
}

/// Value of the monic cubic x^3 + 3 a1 x^2 + 3 a2 x + a3 (Horner).
inline Complex evaluate(const GeneralCubic& g, Complex x) {
  return ((x + 3.0 * g.a1) * x + 3.0 * g.a2) * x + g.a3;
}

/// |g(x)| / (|x|^3 + 3|a1||x|^2 + 3|a2||x| + |a3| + 1).
inline double residual(Complex x, const GeneralCubic& g) {
  const double ax = std::abs(x);
  const double denom = ((ax + 3.0 * std::abs(g.a1)) * ax + 3.0 * std::abs(g.a2)) * ax +
                       std::abs(g.a3) + 1.0;
  return std::abs(evaluate(g, x)) / denom;
}

}  // namespace sylvester
