#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "support/test_support.hpp"
#include "sylvester/numeric_core.hpp"

namespace sylvester {
namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void ExpectNear(Complex actual, Complex expected, double tol) {
  EXPECT_NEAR(actual.real(), expected.real(), tol) << "actual " << actual << " expected " << expected;
  EXPECT_NEAR(actual.imag(), expected.imag(), tol) << "actual " << actual << " expected " << expected;
}

TEST(UnityRoots, CubeToOneAndSumToZero) {
  const Complex w = UnityRoots::omega;
  const Complex w3 = w * w * w;
  constexpr double ulp = std::numeric_limits<double>::epsilon();
  EXPECT_NEAR(w3.real(), 1.0, 2 * ulp);
  EXPECT_NEAR(w3.imag(), 0.0, 2 * ulp);
  EXPECT_NE(w, Complex(1.0, 0.0));
  const Complex sum = 1.0 + w + UnityRoots::omega_sq;
  EXPECT_LE(std::abs(sum.real()), 1e-15);
  EXPECT_LE(std::abs(sum.imag()), 1e-15);
}

TEST(PrincipalCubeRoot, Examples) {
  EXPECT_EQ(principal_cube_root({8.0, 0.0}), Complex(2.0, 0.0));
  ExpectNear(principal_cube_root({-8.0, 0.0}), {1.0, kSqrt3}, 1e-15);
  ExpectNear(principal_cube_root({0.0, 1.0}), {kSqrt3 / 2.0, 0.5}, 1e-15);
  EXPECT_EQ(principal_cube_root({0.0, 0.0}), Complex(0.0, 0.0));
}

TEST(PrincipalCubeRoot, NegativeZeroImaginaryStaysOnUpperSide) {
  const Complex w = principal_cube_root({-8.0, -0.0});
  ExpectNear(w, {1.0, kSqrt3}, 1e-15);
}

TEST(PrincipalCubeRoot, RejectsNonFinite) {
  EXPECT_THROW(principal_cube_root({std::nan(""), 0.0}), InvalidInput);
  EXPECT_THROW(principal_cube_root({0.0, INFINITY}), InvalidInput);
}

TEST(PrincipalCubeRoot, RandomCubesBackWithinTolerance) {
  testing::Sampler sampler(0xC0BE);
  for (int i = 0; i < 10000; ++i) {
    const Complex z = sampler.complex_box(1e10);
    const Complex w = principal_cube_root(z);
    EXPECT_LE(std::abs(w * w * w - z), 1e-13 * std::abs(z)) << z;
    const double arg = std::arg(w);
    // arg(w) is arg(z)/3 up to the rounding of atan2 itself.
    EXPECT_GT(arg, -std::numbers::pi / 3.0 - 1e-15) << z;
    EXPECT_LE(arg, std::numbers::pi / 3.0 + 1e-15) << z;
    EXPECT_NEAR(arg, std::arg(z) / 3.0, 1e-14) << z;
  }
}

TEST(PrincipalCubeRoot, ArgumentRangeAtTheCut) {
  for (double eps : {1e-300, 1e-30, 1e-12, 1e-3}) {
    const Complex above = principal_cube_root({-1.0, eps});
    const Complex below = principal_cube_root({-1.0, -eps});
    EXPECT_LE(std::arg(above), std::numbers::pi / 3.0 + 1e-15);
    EXPECT_GT(std::arg(below), -std::numbers::pi / 3.0 - 1e-15);
  }
}

TEST(AllCubeRoots, Examples) {
  const auto unity = all_cube_roots({1.0, 0.0});
  ExpectNear(unity[0], {1.0, 0.0}, 1e-15);
  ExpectNear(unity[1], UnityRoots::omega, 1e-15);
  ExpectNear(unity[2], UnityRoots::omega_sq, 1e-15);

  const auto m8 = all_cube_roots({-8.0, 0.0});
  ExpectNear(m8[0], {1.0, kSqrt3}, 1e-14);
  ExpectNear(m8[1], {-2.0, 0.0}, 1e-14);
  ExpectNear(m8[2], {1.0, -kSqrt3}, 1e-14);

  for (const auto& z : all_cube_roots({0.0, 0.0})) EXPECT_EQ(z, Complex(0.0, 0.0));
}

TEST(AllCubeRoots, CubesMatchAndAreDistinct) {
  testing::Sampler sampler(17);
  for (int i = 0; i < 2000; ++i) {
    const Complex z = sampler.complex_box(1e6);
    const auto roots = all_cube_roots(z);
    for (const auto& w : roots) EXPECT_LE(std::abs(w * w * w - z), 1e-12 * std::abs(z));
    EXPECT_NE(roots[0], roots[1]);
    EXPECT_NE(roots[1], roots[2]);
    EXPECT_NE(roots[0], roots[2]);
  }
}

TEST(SolveMonicQuadratic, Examples) {
  auto [u1, v1] = solve_monic_quadratic({-3.0, 0.0}, {2.0, 0.0});
  EXPECT_EQ(u1, Complex(1.0, 0.0));
  EXPECT_EQ(v1, Complex(2.0, 0.0));

  auto [u2, v2] = solve_monic_quadratic({-2.0, 0.0}, {1.0, 0.0});
  EXPECT_EQ(u2, Complex(1.0, 0.0));
  EXPECT_EQ(v2, Complex(1.0, 0.0));

  auto [u3, v3] = solve_monic_quadratic({0.0, 0.0}, {1.0, 0.0});
  ExpectNear(u3, {0.0, 1.0}, 1e-16);
  ExpectNear(v3, {0.0, -1.0}, 1e-16);

  auto [u4, v4] = solve_monic_quadratic({0.0, 0.0}, {0.0, 0.0});
  EXPECT_EQ(u4, Complex{});
  EXPECT_EQ(v4, Complex{});
}

// x^2 - (1e8 + 1e-8) x + 1 = (x - 1e8)(x - 1e-8). The textbook formula loses
// every digit of the small root; the sign-matched form keeps it exact.
TEST(SolveMonicQuadratic, NoCancellationForWidelySeparatedRoots) {
  auto [small, big] = solve_monic_quadratic({-(1e8 + 1e-8), 0.0}, {1.0, 0.0});
  EXPECT_NEAR(small.real(), 1e-8, 1e-22);
  EXPECT_NEAR(big.real(), 1e8, 1e-6);

  // Integer roots 1 and 10^7: exact sum and product are representable.
  auto [a, b] = solve_monic_quadratic({-10000001.0, 0.0}, {10000000.0, 0.0});
  EXPECT_EQ(a, Complex(1.0, 0.0));
  EXPECT_EQ(b, Complex(10000000.0, 0.0));
}

TEST(SolveMonicQuadratic, RandomVietaRelations) {
  testing::Sampler sampler(99);
  for (int i = 0; i < 10000; ++i) {
    const Complex b = sampler.complex_box(1e8);
    const Complex c = sampler.complex_box(1e8);
    auto [u, v] = solve_monic_quadratic(b, c);
    EXPECT_LE(std::abs(u + v + b), 1e-12 * (1.0 + std::abs(b))) << b << ' ' << c;
    EXPECT_LE(std::abs(u * v - c), 1e-12 * (1.0 + std::abs(c))) << b << ' ' << c;
  }
}

// Across magnitudes the sum can only be as accurate as the roots themselves,
// which are of size max(|b|, sqrt|c|); with |b| << sqrt|c| the two roots
// cancel and 1e-12 (1 + |b|) is out of reach.
TEST(SolveMonicQuadratic, RandomVietaRelationsAcrossMagnitudes) {
  testing::Sampler sampler(99);
  for (int i = 0; i < 10000; ++i) {
    const double mag_b = std::exp(sampler.uniform(std::log(1e-3), std::log(1e8)));
    const double mag_c = std::exp(sampler.uniform(std::log(1e-3), std::log(1e8)));
    const Complex b = std::polar(mag_b, sampler.uniform(-M_PI, M_PI));
    const Complex c = std::polar(mag_c, sampler.uniform(-M_PI, M_PI));
    auto [u, v] = solve_monic_quadratic(b, c);
    const double root_scale = std::max(std::abs(b), std::sqrt(std::abs(c)));
    EXPECT_LE(std::abs(u + v + b), 1e-14 * (1.0 + root_scale)) << b << ' ' << c;
    EXPECT_LE(std::abs(u * v - c), 1e-14 * (1.0 + std::abs(c))) << b << ' ' << c;
  }
}

TEST(SolveMonicQuadratic, HugeCoefficientsDoNotOverflow) {
  auto [u, v] = solve_monic_quadratic({-3e200, 0.0}, {2e200, 0.0});
  EXPECT_TRUE(is_finite(u));
  EXPECT_TRUE(is_finite(v));
  EXPECT_NEAR(v.real() / 3e200, 1.0, 1e-15);
}

TEST(SolveMonicQuadratic, RejectsNonFinite) {
  EXPECT_THROW(solve_monic_quadratic({NAN, 0.0}, {1.0, 0.0}), InvalidInput);
  EXPECT_THROW(solve_monic_quadratic({1.0, 0.0}, {0.0, -INFINITY}), InvalidInput);
}

}  // namespace
}  // namespace sylvester
