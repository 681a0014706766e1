#include <gtest/gtest.h>

#include "support/test_support.hpp"
#include "sylvester/oracle.hpp"
#include "sylvester/solver.hpp"

namespace sylvester::oracle {
namespace {

using Roots = std::array<Complex, 3>;

TEST(IterateAllRoots, UnityRoots) {
  const auto z = iterate_all_roots({0.0, 0.0, -1.0});
  EXPECT_LE(match_roots(z, Roots{1.0, UnityRoots::omega, UnityRoots::omega_sq}).max_distance, 1e-12);
  EXPECT_TRUE(std::is_sorted(z.begin(), z.end(), root_less));
}

TEST(IterateAllRoots, CrossValidatesSylvesterPath) {
  const auto z = iterate_all_roots({0.0, -6.0, 6.0});
  EXPECT_LE(match_roots(z, solve_generic({1.0, 2.0})).max_distance, 1e-9);
}

TEST(IterateAllRoots, DoubleRootWithLooserBound) {
  const auto z = iterate_all_roots({0.0, -3.0, 2.0});
  EXPECT_LE(match_roots(z, Roots{1.0, 1.0, -2.0}).max_distance, 1e-6);
}

TEST(IterateAllRoots, TripleRootTerminates) {
  const auto z = iterate_all_roots({3.0, 3.0, 1.0});  // (x + 1)^3
  EXPECT_LE(match_roots(z, Roots{-1.0, -1.0, -1.0}).max_distance, 1e-4);
}

TEST(IterateAllRoots, ResidualsWithinTenTol) {
  testing::Sampler sampler(606);
  for (int i = 0; i < 1000; ++i) {
    const MonicCubicCoeffs c{sampler.complex_box(10.0), sampler.complex_box(10.0), sampler.complex_box(10.0)};
    for (const auto& x : iterate_all_roots(c, 1e-13)) EXPECT_LE(residual(x, c), 1e-12);
  }
}

TEST(IterateAllRoots, RecoversConstructedRoots) {
  testing::Sampler sampler(4242);
  int checked = 0;
  while (checked < 1000) {
    const Roots z{sampler.complex_box(10.0), sampler.complex_box(10.0), sampler.complex_box(10.0)};
    if (std::abs(z[0] - z[1]) < 1e-4 || std::abs(z[0] - z[2]) < 1e-4 || std::abs(z[1] - z[2]) < 1e-4) continue;
    ++checked;
    const auto coeffs = testing::expand_roots(z);
    const auto found = iterate_all_roots({coeffs[2], coeffs[1], coeffs[0]});
    EXPECT_LE(match_roots(found, z).max_distance, 1e-9 * (1.0 + testing::max_abs(z)));
  }
}

TEST(IterateAllRoots, ArgumentValidation) {
  EXPECT_THROW(iterate_all_roots({0.0, 0.0, 1.0}, 0.0), InvalidInput);
  EXPECT_THROW(iterate_all_roots({0.0, 0.0, 1.0}, 1e-5), InvalidInput);
  EXPECT_THROW(iterate_all_roots({0.0, 0.0, 1.0}, 1e-13, 0), InvalidInput);
  EXPECT_THROW(iterate_all_roots({NAN, 0.0, 1.0}), InvalidInput);
}

TEST(IterateAllRoots, NoConvergenceCarriesLastIterate) {
  try {
    iterate_all_roots({0.0, -6.0, 6.0}, 1e-13, 1);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    for (const auto& z : e.last_iterate) EXPECT_TRUE(is_finite(z));
  }
}

TEST(MatchRoots, Examples) {
  EXPECT_EQ(match_roots(Roots{1.0, 2.0, 3.0}, Roots{3.0, 1.0, 2.0}).max_distance, 0.0);

  const auto near = match_roots(Roots{0.0, 0.0, 0.0}, Roots{1e-9, 0.0, -1e-9});
  EXPECT_DOUBLE_EQ(near.max_distance, 1e-9);

  const Complex i{0.0, 1.0};
  const auto perm = match_roots(Roots{1.0, i, -i}, Roots{1.0, -i, i});
  EXPECT_EQ(perm.max_distance, 0.0);
  EXPECT_EQ(perm.permutation, (std::array<int, 3>{0, 2, 1}));
}

TEST(MatchRoots, TieGoesToFirstPermutation) {
  const auto m = match_roots(Roots{0.0, 0.0, 0.0}, Roots{0.0, 0.0, 0.0});
  EXPECT_EQ(m.permutation, (std::array<int, 3>{0, 1, 2}));
}

TEST(MatchRoots, ReportConsistencyAndSymmetry) {
  testing::Sampler sampler(31);
  for (int i = 0; i < 1000; ++i) {
    const Roots a{sampler.complex_box(3.0), sampler.complex_box(3.0), sampler.complex_box(3.0)};
    const Roots b{sampler.complex_box(3.0), sampler.complex_box(3.0), sampler.complex_box(3.0)};
    const auto ab = match_roots(a, b);
    EXPECT_EQ(ab.max_distance, std::max({ab.distances[0], ab.distances[1], ab.distances[2]}));
    EXPECT_EQ(ab.max_distance, match_roots(b, a).max_distance);
  }
}

}  // namespace
}  // namespace sylvester::oracle
