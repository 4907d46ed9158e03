#include <gtest/gtest.h>

#include <map>
#include <set>

#include "derange/euler_tables.hpp"
#include "oracles.hpp"
#include "worked_table.hpp"

using namespace derange;
using namespace derange::euler;
using oracle::bold_word;

TEST(DifferenceTable, SmallEntries) {
  const auto t = build_tables(4);
  EXPECT_EQ(t.e(3, 3), LambdaPolynomial(6));
  EXPECT_EQ(t.d(4, 4), LambdaPolynomial(1));
  EXPECT_EQ(t.d(4, 2).evaluate(2), 19);
  EXPECT_EQ(t.d(4, 2).evaluate(1), 12);
  // Column 0 is the lambda-factorial.
  EXPECT_EQ(t.d(3, 0).evaluate(2), 16);
  EXPECT_EQ(t.d(4, 0).evaluate(0), 9);
  EXPECT_EQ(t.d_extended(-1, -1), LambdaPolynomial(1));
  EXPECT_EQ(t.d_extended(2, 3), LambdaPolynomial());
  EXPECT_EQ(t.d_extended(1, -1), LambdaPolynomial::shifted_power(-1, 2));
  EXPECT_THROW(t.d(3, 4), std::out_of_range);
  EXPECT_THROW(t.d(5, 1), std::out_of_range);
}

TEST(DifferenceTable, EntriesCountTheColouredSets) {
  const auto t = build_tables(6);
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int lam = 0; lam <= 3; ++lam) {
        ASSERT_EQ(t.d(n, k).evaluate(lam), oracle::Dkn_count(n, k, lam)) << n << ' ' << k << ' ' << lam;
      }
    }
  }
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int lam = 0; lam <= 3; ++lam) {
        const auto all = enumerate_Dkn(n, k, lam);
        ASSERT_EQ(BigInt(all.size()), t.d(n, k).evaluate(lam));
        ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));
        for (const auto& p : all) ASSERT_TRUE(in_Dkn(p, n, k, lam));
      }
    }
  }
}

TEST(DifferenceTable, Recurrences) {
  const auto t = build_tables(10);
  const auto lm1 = LambdaPolynomial::shifted_power(-1, 1);
  for (int n = 0; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      ASSERT_EQ(t.d(n, k - 1), LambdaPolynomial(k) * t.d(n, k) + lm1 * t.d_extended(n - 1, k - 1));
    }
    for (int k = 0; k < n; ++k) {
      ASSERT_EQ(t.d(n, k), LambdaPolynomial(n) * t.d_extended(n - 1, k) + lm1 * t.d_extended(n - 2, k - 1));
      ASSERT_EQ(t.d(n, k), (LambdaPolynomial(n) + lm1) * t.d_extended(n - 1, k) -
                               lm1 * LambdaPolynomial(n - k - 1) * t.d_extended(n - 2, k));
    }
  }
}

TEST(DifferenceTable, ChangeOfBasis) {
  const auto t = build_tables(8);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<BigInt> column(n + 1);
      for (int lam = -1; lam <= 3; ++lam) {
        for (int m = k; m <= n; ++m) column[m] = t.d(m, k).evaluate(lam);
        for (int nu = -1; nu <= 3; ++nu) {
          ASSERT_EQ(dkn_change_basis<BigInt>(n, k, BigInt(nu - lam), column), t.d(n, k).evaluate(nu));
        }
      }
    }
  }
  std::vector<BigInt> column(5);
  for (int m = 2; m <= 4; ++m) column[m] = t.d(m, 2).evaluate(1);
  EXPECT_EQ(dkn_change_basis<BigInt>(4, 2, BigInt(1), column), 19);
  for (int m = 0; m <= 4; ++m) column[m] = t.d(m, 0).evaluate(1);
  EXPECT_EQ(dkn_change_basis<BigInt>(4, 0, BigInt(-1), column), 9);
}

TEST(Membership, ColouredSets) {
  EXPECT_TRUE(in_Dkn(bold_word("21[3]4", 2), 4, 2, 2));
  EXPECT_FALSE(in_Dkn(bold_word("1234", 0), 4, 2, 2));
  EXPECT_FALSE(in_Dkn(bold_word("2134", 2), 4, 3, 2));
  EXPECT_FALSE(in_Dkn(bold_word("2134", 2), 4, 2, 3));
  EXPECT_EQ(enumerate_Dkn(3, 1, 0).size(), 3u);
}

namespace {

std::vector<Zeta1Arg> sorted(std::vector<Zeta1Arg> v) {
  std::sort(v.begin(), v.end(), [](const Zeta1Arg& x, const Zeta1Arg& y) {
    return std::tie(x.j, x.colour, x.perm) < std::tie(y.j, y.colour, y.perm);
  });
  return v;
}

}  // namespace

TEST(Bijections, WorkedTableOfD24) {
  const auto rows = oracle::worked_table();
  const auto all = enumerate_Dkn(4, 2, 2);
  ASSERT_EQ(rows.size(), all.size());
  for (const auto& row : rows) {
    SCOPED_TRACE(row.word);
    const auto q = bold_word(row.word, 2);
    EXPECT_TRUE(std::find(all.begin(), all.end(), q) != all.end());
    EXPECT_EQ(theta(row.theta, 3), q);
    EXPECT_EQ(theta_inverse(q, 3), row.theta);
    EXPECT_EQ(eta(row.eta, 2, 4), q);
    EXPECT_EQ(eta_inverse(q, 2), row.eta);
    for (const auto& z : row.zeta1) EXPECT_EQ(zeta1(z, 2), q);
    EXPECT_EQ(sorted(zeta1_preimages(q, 2)), sorted(row.zeta1));
    EXPECT_EQ(zeta2_inverse(q, 2), row.zeta2);
    if (row.zeta2) EXPECT_EQ(zeta2(*row.zeta2, 2), q);
  }
}

TEST(Bijections, EtaColourBranchOnALargerWord) {
  const auto arg = ColourArg{2, ColouredPermutation::with_tail_scope(Permutation::from_word("542361"), 3, 2)};
  const auto q = eta(arg, 4, 8);
  EXPECT_EQ(q.perm(), Permutation::from_word("76435281"));
  EXPECT_EQ(q.essential_fixed_points(), (std::vector<int>{5}));
  EXPECT_EQ(eta_inverse(q, 4), BranchArg(arg));
}

TEST(Bijections, RejectBadArguments) {
  EXPECT_THROW(theta(IndexArg{4, bold_word("3214", 3)}, 3), std::invalid_argument);
  EXPECT_THROW(theta(ColourArg{3, bold_word("213", 2)}, 3), std::invalid_argument);
  EXPECT_THROW(theta(IndexArg{1, bold_word("2314", 3)}, 3), std::invalid_argument);
  EXPECT_THROW(eta(IndexArg{5, bold_word("213", 2)}, 2, 4), std::invalid_argument);
  EXPECT_THROW(zeta2(Zeta2Arg{2, 3, bold_word("21", 2)}, 2), std::invalid_argument);
  EXPECT_THROW(zeta1(Zeta1Arg{2, 2, bold_word("213", 2)}, 2), std::invalid_argument);
}

class BijectionSweep : public ::testing::TestWithParam<int> {};

TEST_P(BijectionSweep, ThetaAndEtaAreInvertibleBijections) {
  const int lam = GetParam();
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::set<ColouredPermutation> images;
      std::size_t domain = 0;
      auto visit = [&](const BranchArg& arg) {
        ++domain;
        const auto q = theta(arg, k);
        ASSERT_TRUE(in_Dkn(q, n, k - 1, lam));
        ASSERT_EQ(theta_inverse(q, k), arg);
        images.insert(q);
      };
      for (const auto& p : enumerate_Dkn(n, k, lam)) {
        for (int j = 1; j <= k; ++j) visit(IndexArg{j, p});
      }
      for (const auto& p : enumerate_Dkn(n - 1, k - 1, lam)) {
        for (int c = 2; c <= lam; ++c) visit(ColourArg{c, p});
      }
      ASSERT_EQ(images.size(), domain);
      ASSERT_EQ(images.size(), enumerate_Dkn(n, k - 1, lam).size());
    }
    for (int k = 1; k < n; ++k) {
      std::set<ColouredPermutation> images;
      std::size_t domain = 0;
      auto visit = [&](const BranchArg& arg) {
        ++domain;
        const auto q = eta(arg, k, n);
        ASSERT_TRUE(in_Dkn(q, n, k, lam));
        ASSERT_EQ(eta_inverse(q, k), arg);
        images.insert(q);
      };
      for (const auto& p : enumerate_Dkn(n - 1, k, lam)) {
        for (int j = 1; j <= n; ++j) visit(IndexArg{j, p});
      }
      if (n >= 2) {
        for (const auto& p : enumerate_Dkn(n - 2, k - 1, lam)) {
          for (int c = 2; c <= lam; ++c) visit(ColourArg{c, p});
        }
      }
      ASSERT_EQ(images.size(), domain);
      ASSERT_EQ(images.size(), enumerate_Dkn(n, k, lam).size());
    }
  }
}

TEST_P(BijectionSweep, Zeta1IsTwoToOneExactlyOnTheImageOfZeta2) {
  const int lam = GetParam();
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < n; ++k) {
      std::map<ColouredPermutation, int> hits;
      for (const auto& p : enumerate_Dkn(n - 1, k, lam)) {
        for (int j = 1; j <= n; ++j) ++hits[zeta1({j, 1, p}, k)];
        for (int c = 2; c <= lam; ++c) ++hits[zeta1({k + 1, c, p}, k)];
      }
      std::set<ColouredPermutation> doubles;
      std::size_t zeta2_domain = 0;
      if (n - 2 >= k) {
        for (const auto& p : enumerate_Dkn(n - 2, k, lam)) {
          for (int c = 2; c <= lam; ++c) {
            for (int j = k + 2; j <= n; ++j) {
              const Zeta2Arg arg{c, j, p};
              const auto q = zeta2(arg, k);
              ASSERT_EQ(zeta2_inverse(q, k), arg);
              doubles.insert(q);
              ++zeta2_domain;
            }
          }
        }
      }
      ASSERT_EQ(doubles.size(), zeta2_domain);
      const auto all = enumerate_Dkn(n, k, lam);
      ASSERT_EQ(hits.size(), all.size());
      for (const auto& q : all) {
        const std::size_t expected = doubles.contains(q) ? 2 : 1;
        ASSERT_EQ(static_cast<std::size_t>(hits[q]), expected) << q.to_string();
        const auto pre = zeta1_preimages(q, k);
        ASSERT_EQ(pre.size(), expected);
        for (const auto& z : pre) ASSERT_EQ(zeta1(z, k), q);
        ASSERT_EQ(zeta2_inverse(q, k).has_value(), expected == 2);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Lambda, BijectionSweep, ::testing::Values(2, 3));
