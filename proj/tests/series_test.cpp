#include <gtest/gtest.h>

#include <random>

#include "derange/series.hpp"
#include "oracles.hpp"

using namespace derange;
using namespace derange::series;

TEST(MultiSeries, CoefficientAccess) {
  MultiSeries s({2, 1});
  EXPECT_EQ(s.coefficient({0, 0}), 0);
  s.set({1, 1}, 5);
  EXPECT_EQ(s.coefficient({1, 1}), 5);
  EXPECT_EQ(s.coefficient({3, 0}), 0);
  EXPECT_THROW(s.set({3, 0}, 1), std::out_of_range);
  s.set({1, 1}, 0);
  EXPECT_EQ(s.terms(), 0u);
}

TEST(MultiSeries, ProductRejectsMismatchedCaps) {
  EXPECT_THROW(series_mul(series_one({1, 2}), series_one({2, 1})), std::invalid_argument);
}

TEST(MultiSeries, OneIsTheUnit) {
  const auto s = inv_one_minus_sum({3, 2});
  EXPECT_EQ(series_mul(series_one({3, 2}), s), s);
}

TEST(MultiSeries, InverseOnePlusVarTimesOnePlusVarIsOne) {
  MultiSeries lin({4, 0});
  lin.set({0, 0}, 1);
  lin.set({1, 0}, 1);
  EXPECT_EQ(series_mul(inv_one_plus_var(1, {4, 0}), lin), series_one({4, 0}));
  const auto inv = inv_one_plus_var(1, {4, 0});
  EXPECT_EQ(inv.coefficient({3, 0}), -1);
  EXPECT_EQ(inv.coefficient({4, 0}), 1);
}

TEST(MultiSeries, InverseOneMinusSumIsMultinomial) {
  const auto s = inv_one_minus_sum({3, 2, 2});
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= 2; ++j) {
      for (int l = 0; l <= 2; ++l) {
        const std::vector<int> e{i, j, l};
        EXPECT_EQ(s.coefficient(e), multinomial(e));
      }
    }
  }
}

TEST(MultiSeries, ProductStaysWithinCaps) {
  const auto s = series_mul(inv_one_minus_sum({2, 2}), inv_one_minus_sum({2, 2}));
  for (const auto& [e, c] : s.coefficients()) EXPECT_TRUE(s.within_caps(e));
  // (1 - x - y)^-2 at x y: 3! / 1! 1! = 6.
  EXPECT_EQ(s.coefficient({1, 1}), 6);
}

TEST(CoeffDj, Examples) {
  EXPECT_EQ(coeff_Dj(Composition{4, 2}, 2), 7);
  EXPECT_EQ(coeff_Dj(Composition{4, 2}, 1), 9);
  EXPECT_EQ(coeff_Dj(Composition{4, 2}, 0), 15);
  EXPECT_EQ(coeff_Dj(Composition{2, 1}, 1), 2);
  EXPECT_EQ(coeff_Dj(Composition::ones(6), 6), 265);
  EXPECT_THROW(coeff_Dj(Composition{2, 1}, 3), std::out_of_range);
  EXPECT_THROW(coeff_Dj(Composition{2, 1}, -1), std::out_of_range);
}

TEST(CoeffDj, ZeroPartsBehaveLikeEmptyBlocks) {
  EXPECT_EQ(coeff_Dj(Composition{2, 0, 2}, 3), coeff_Dj(Composition{2, 2}, 2));
  EXPECT_EQ(coeff_Dj(Composition{0}, 1), 1);
}

TEST(CoeffDj, MatchesBruteForceOverAllSmallCompositions) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : compositions_of(n)) {
      const std::vector<int> parts(a.parts().begin(), a.parts().end());
      for (int j = 0; j <= a.blocks(); ++j) {
        ASSERT_EQ(coeff_Dj(a, j), oracle::Dj(parts, j)) << a.to_string() << " j=" << j;
      }
    }
  }
}

TEST(CoeffDj, MonotoneInJ) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Composition a(oracle::random_composition(rng, 1 + static_cast<int>(rng() % 10)));
    for (int j = 1; j <= a.blocks(); ++j) ASSERT_LE(coeff_Dj(a, j), coeff_Dj(a, j - 1));
  }
}
