#pragma once

// Independent reference root finder. Nothing here touches the Sylvester
// path; it exists so the closed-form solver can be checked against a method
// with entirely different failure modes.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "sylvester/complex.hpp"
#include "sylvester/reduction.hpp"

namespace sylvester::oracle {

/// x^3 + c2 x^2 + c1 x + c0.
struct MonicCubicCoeffs {
  Complex c2;
  Complex c1;
  Complex c0;
};

inline MonicCubicCoeffs from_reduced(const ReducedCubic& rc) {
  return {Complex{}, -3.0 * rc.p, rc.q};
}

inline MonicCubicCoeffs from_general(const GeneralCubic& g) {
  return {3.0 * g.a1, 3.0 * g.a2, g.a3};
}

inline Complex evaluate(const MonicCubicCoeffs& c, Complex x) {
  return ((x + c.c2) * x + c.c1) * x + c.c0;
}

inline double residual(Complex x, const MonicCubicCoeffs& c) {
  const double ax = std::abs(x);
  const double denom =
      ((ax + std::abs(c.c2)) * ax + std::abs(c.c1)) * ax + std::abs(c.c0) + 1.0;
  return std::abs(evaluate(c, x)) / denom;
}

class NoConvergence : public Error {
 public:
  explicit NoConvergence(std::array<Complex, 3> last)
      : Error("simultaneous iteration did not converge"), last_iterate(last) {}

  std::array<Complex, 3> last_iterate;
};

inline constexpr double kDefaultTol = 1e-13;
inline constexpr int kDefaultMaxIters = 200;

/// Durand-Kerner (Weierstrass) iteration for all three roots at once.
///
/// Seeds are R * (0.4 + 0.9i)^k, with R = max(1, |c2|, |c1|^(1/2), |c0|^(1/3)).
/// Stops once every relative update is <= tol or every relative residual is
/// <= tol (with the root sum matching -c2); the residual test is what lets
/// clustered roots terminate, since their updates stall near
/// sqrt(machine epsilon). Roots are returned sorted by (re, im).
inline std::array<Complex, 3> iterate_all_roots(const MonicCubicCoeffs& c,
                                                double tol = kDefaultTol,
                                                int max_iters = kDefaultMaxIters) {
  require_finite(c.c2, "c2");
  require_finite(c.c1, "c1");
  require_finite(c.c0, "c0");
  if (!(tol > 0.0 && tol <= 1e-6)) throw InvalidInput("tol must lie in (0, 1e-6]");
  if (max_iters < 1) throw InvalidInput("max_iters must be >= 1");

  const double radius = std::max({1.0, std::abs(c.c2), std::sqrt(std::abs(c.c1)),
                                  std::cbrt(std::abs(c.c0))});
  const Complex seed{0.4, 0.9};
  std::array<Complex, 3> z{radius * Complex{1.0, 0.0}, radius * seed, radius * seed * seed};

  auto sorted = [](std::array<Complex, 3> roots) {
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
  };

  for (int iter = 0; iter < max_iters; ++iter) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      Complex denom{1.0, 0.0};
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == Complex{}) {
        // Two estimates collided; nudge off the coincidence.
        z[i] += Complex{0.0, 1e-8 * radius};
        max_step = std::numeric_limits<double>::infinity();
        continue;
      }
      const Complex step = evaluate(c, z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    // Small residuals alone would also accept two estimates parked on the
    // same simple root, so the trace must roughly agree as well. A triple
    // root smears the estimates by ~cbrt(machine epsilon), hence the loose 1e-4.
    bool all_small_residuals = std::abs(z[0] + z[1] + z[2] + c.c2) <= 1e-4 * radius;
    for (const auto& x : z) all_small_residuals = all_small_residuals && residual(x, c) <= tol;
    if (max_step <= tol || all_small_residuals) return sorted(z);
  }
  throw NoConvergence(sorted(z));
}

/// Pairing of two root triples: b[permutation[i]] is matched with a[i].
struct MatchReport {
  std::array<int, 3> permutation{0, 1, 2};
  double max_distance = 0.0;
  std::array<double, 3> distances{};
};

/// Minimises the largest pairwise distance over all six pairings; ties go to
/// the lexicographically first permutation.
inline MatchReport match_roots(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
  std::array<int, 3> perm{0, 1, 2};
  MatchReport best;
  best.max_distance = std::numeric_limits<double>::infinity();
  do {
    MatchReport candidate;
    candidate.permutation = perm;
    for (std::size_t i = 0; i < 3; ++i) {
      candidate.distances[i] = std::abs(a[i] - b[static_cast<std::size_t>(perm[i])]);
      candidate.max_distance = std::max(candidate.max_distance, candidate.distances[i]);
    }
    if (candidate.max_distance < best.max_distance) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace sylvester::oracle
