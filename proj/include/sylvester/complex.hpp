#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sylvester {

/// Universal scalar type. Every value crossing the public API is finite.
using Complex = std::complex<double>;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN/infinity at an API boundary, or an option outside its documented range.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The cubic coefficient is zero, so the input is not a cubic.
class DegenerateLeadingCoefficient : public Error {
 public:
  DegenerateLeadingCoefficient() : Error("leading coefficient is zero") {}
};

/// decompose() was handed r == s; the classifier should have routed this to
/// the double-root branch.
class CoincidentResolventRoots : public Error {
 public:
  CoincidentResolventRoots()
      : Error("resolvent roots coincide; input is not generic") {}
};

/// A cube root t of r/s landed on 1, making (r - t s) / (1 - t) blow up.
class UnitRatioDegeneracy : public Error {
 public:
  UnitRatioDegeneracy()
      : Error("cube root of r/s is numerically 1; near-double resolvent root") {}
};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, std::string_view what) {
  if (!is_finite(z)) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
}

}  // namespace sylvester
