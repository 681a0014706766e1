#pragma once

// Sylvester's solution of the reduced cubic f(x) = x^3 - 3 p x + q.
//
// Writing f(x) = x^3 - 3 r s x + r s (r + s) requires r s = p and
// r + s = q / p, so r and s are the roots of x^2 - (q/p) x + p. Three cases:
//
//   p = 0          f(x) = x^3 + q, roots are the cube roots of -q.
//   q^2 = 4 p^3    r = s = q / (2p) is a double root of f, since it also
//                  annihilates f'(x) = 3 (x^2 - p); the third root is -2r.
//   otherwise      f(x) = a (x - r)^3 + b (x - s)^3 with a = s / (s - r),
//                  b = r / (r - s). Setting this to zero gives
//                  ((x - r) / (x - s))^3 = r / s.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string_view>

#include "sylvester/complex.hpp"
#include "sylvester/numeric_core.hpp"
#include "sylvester/reduction.hpp"

namespace sylvester {

enum class CaseTag { PureCube, DoubleResolventRoot, Generic };

inline std::string_view to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::PureCube:
      return "pure_cube";
    case CaseTag::DoubleResolventRoot:
      return "double_resolvent_root";
    case CaseTag::Generic:
      return "generic";
  }
  return "unknown";
}

struct Classification {
  CaseTag tag = CaseTag::Generic;
  /// r = q / (2p), set only for DoubleResolventRoot.
  std::optional<Complex> witness;
};

/// Roots of the resolvent quadratic, labelled so that |r| <= |s|.
struct Resolvent {
  Complex r;
  Complex s;
};

/// f(x) = alpha (x - r)^3 + beta (x - s)^3.
struct Decomposition {
  Complex r;
  Complex s;
  Complex alpha;
  Complex beta;
};

struct SolveOptions {
  double eps_class = 1e-10;
  int polish_iters = 2;
};

struct SolveResult {
  /// Sorted by (re, im) ascending.
  std::array<Complex, 3> roots;
  Classification classification;
  std::array<double, 3> residuals{};
  /// Present iff the classification is Generic.
  std::optional<Decomposition> decomposition;
};

inline constexpr double kDefaultEpsClass = 1e-10;
inline constexpr int kMaxPolishIters = 8;

inline void validate(const SolveOptions& opts) {
  if (!(opts.eps_class > 0.0 && opts.eps_class <= 1e-2)) {
    throw InvalidInput("eps_class must lie in (0, 1e-2]");
  }
  if (opts.polish_iters < 0 || opts.polish_iters > kMaxPolishIters) {
    throw InvalidInput("polish_iters must lie in [0, 8]");
  }
}

/// 1 + max(|p|^(1/2), |q|^(1/3))^3, the magnitude scale of the roots cubed
/// plus one. Used for Vieta and stress tolerances.
inline double vieta_scale(const ReducedCubic& rc) {
  const double m = std::max(std::sqrt(std::abs(rc.p)), std::cbrt(std::abs(rc.q)));
  return 1.0 + m * m * m;
}

inline Complex evaluate(const ReducedCubic& rc, Complex x) {
  return (x * x - 3.0 * rc.p) * x + rc.q;
}

/// |f(x)| / (|x|^3 + 3|p||x| + |q| + 1); zero iff f(x) == 0 exactly.
inline double residual(Complex x, const ReducedCubic& rc) {
  const double ax = std::abs(x);
  const double denom = (ax * ax + 3.0 * std::abs(rc.p)) * ax + std::abs(rc.q) + 1.0;
  return std::abs(evaluate(rc, x)) / denom;
}

/// Case split with relative bands:
///   PureCube            |p| <= eps (1 + |q|^(2/3))
///   DoubleResolventRoot |q^2 - 4p^3| <= eps max(|q|^2, 4|p|^3)
///   Generic             otherwise
inline Classification classify(const ReducedCubic& rc, double eps_class = kDefaultEpsClass) {
  require_finite(rc);
  if (!(eps_class > 0.0 && eps_class <= 1e-2)) {
    throw InvalidInput("eps_class must lie in (0, 1e-2]");
  }
  const double abs_p = std::abs(rc.p);
  const double abs_q = std::abs(rc.q);
  if (abs_p <= eps_class * (1.0 + std::pow(abs_q, 2.0 / 3.0))) {
    return {CaseTag::PureCube, std::nullopt};
  }
  const Complex p_cubed = rc.p * rc.p * rc.p;
  const double gap = std::abs(rc.q * rc.q - 4.0 * p_cubed);
  const double band = std::max(abs_q * abs_q, 4.0 * abs_p * abs_p * abs_p);
  if (gap <= eps_class * band) {
    return {CaseTag::DoubleResolventRoot, rc.q / (2.0 * rc.p)};
  }
  return {CaseTag::Generic, std::nullopt};
}

/// Roots of x^2 - (q/p) x + p. Requires p != 0.
inline Resolvent resolvent(const ReducedCubic& rc) {
  require_finite(rc);
  if (rc.p == Complex{}) throw InvalidInput("resolvent requires p != 0");

  auto [u, v] = solve_monic_quadratic(-rc.q / rc.p, rc.p);
  const double mu = std::abs(u);
  const double mv = std::abs(v);
  const bool tie = std::abs(mu - mv) <= std::numeric_limits<double>::epsilon() * std::max(mu, mv);
  const bool swap = tie ? detail::principal_arg(v) < detail::principal_arg(u) : mv < mu;
  if (swap) std::swap(u, v);
  return {u, v};
}

inline Decomposition decompose(const Resolvent& res) {
  require_finite(res.r, "r");
  require_finite(res.s, "s");
  if (res.r == res.s) throw CoincidentResolventRoots();
  const Complex diff = res.s - res.r;
  return {res.r, res.s, res.s / diff, -res.r / diff};
}

/// Coefficients (x^3, x^2, x, 1) of alpha (x - r)^3 + beta (x - s)^3.
inline std::array<Complex, 4> expand(const Decomposition& d) {
  const Complex ar = d.alpha * d.r;
  const Complex bs = d.beta * d.s;
  const Complex ar2 = ar * d.r;
  const Complex bs2 = bs * d.s;
  return {d.alpha + d.beta, -3.0 * (ar + bs), 3.0 * (ar2 + bs2), -(ar2 * d.r + bs2 * d.s)};
}

/// Roots of x^3 - 3 r s x + r s (r + s) from (x - r) = t_k (x - s), where t_k
/// runs over the cube roots of r / s in all_cube_roots order. Expects
/// |r| <= |s| so that |t_k| <= 1.
inline std::array<Complex, 3> solve_generic(const Resolvent& res) {
  require_finite(res.r, "r");
  require_finite(res.s, "s");
  if (res.s == Complex{}) throw InvalidInput("solve_generic requires s != 0");

  const auto ts = all_cube_roots(res.r / res.s);
  std::array<Complex, 3> roots;
  for (std::size_t k = 0; k < 3; ++k) {
    const Complex t = ts[k];
    const Complex denom = 1.0 - t;
    if (std::abs(denom) <= 1e-14 * (1.0 + std::abs(t))) throw UnitRatioDegeneracy();
    roots[k] = (res.r - t * res.s) / denom;
  }
  return roots;
}

/// {r, r, -2r} with r = q / (2p).
inline std::array<Complex, 3> solve_double(const ReducedCubic& rc) {
  require_finite(rc);
  if (rc.p == Complex{}) throw InvalidInput("solve_double requires p != 0");
  const Complex r = rc.q / (2.0 * rc.p);
  return {r, r, -2.0 * r};
}

/// Cube roots of -q.
inline std::array<Complex, 3> solve_pure_cube(const ReducedCubic& rc) {
  require_finite(rc);
  return all_cube_roots(-rc.q);
}

/// Newton refinement with f'(x) = 3 (x^2 - p). A step is taken only when
/// |f'(x)| exceeds 1e-14 * 3 (|x|^2 + |p|) and is kept only if it does not
/// increase the residual.
inline Complex polish(Complex x, const ReducedCubic& rc, int iters) {
  require_finite(x, "polish start");
  require_finite(rc);
  if (iters < 0 || iters > kMaxPolishIters) {
    throw InvalidInput("polish iterations must lie in [0, 8]");
  }
  double current = residual(x, rc);
  for (int i = 0; i < iters && current > 0.0; ++i) {
    const Complex slope = 3.0 * (x * x - rc.p);
    const double guard = 1e-14 * 3.0 * (std::norm(x) + std::abs(rc.p));
    if (std::abs(slope) <= guard) break;
    const Complex next = x - evaluate(rc, x) / slope;
    if (!is_finite(next)) break;
    const double next_residual = residual(next, rc);
    if (next_residual > current) break;
    x = next;
    current = next_residual;
  }
  return x;
}

inline bool root_less(Complex a, Complex b) noexcept {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

inline SolveResult solve_reduced(const ReducedCubic& rc, const SolveOptions& opts = {}) {
  require_finite(rc);
  validate(opts);

  SolveResult result;
  result.classification = classify(rc, opts.eps_class);
  switch (result.classification.tag) {
    case CaseTag::PureCube:
      result.roots = solve_pure_cube(rc);
      break;
    case CaseTag::DoubleResolventRoot:
      result.roots = solve_double(rc);
      break;
    case CaseTag::Generic: {
      const Resolvent res = resolvent(rc);
      result.decomposition = decompose(res);
      result.roots = solve_generic(res);
      break;
    }
  }

  for (auto& x : result.roots) x = polish(x, rc, opts.polish_iters);
  std::sort(result.roots.begin(), result.roots.end(), root_less);
  for (std::size_t k = 0; k < 3; ++k) result.residuals[k] = residual(result.roots[k], rc);
  return result;
}

}  // namespace sylvester
