#include <gtest/gtest.h>

#include <random>
#include <set>

#include "derange/counting.hpp"
#include "oracles.hpp"

using namespace derange;
using namespace derange::counting;

namespace {

std::vector<int> parts_of(const Composition& a) { return {a.parts().begin(), a.parts().end()}; }

}  // namespace

TEST(Members, EnumerationMatchesFilter) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& a : compositions_of(n)) {
      const auto listed = members(a);
      std::vector<Permutation> filtered;
      for (const auto& w : oracle::all_words(n)) {
        if (oracle::decreasing_in_blocks(w, parts_of(a))) filtered.emplace_back(w);
      }
      ASSERT_EQ(listed, filtered) << a.to_string();
      ASSERT_EQ(BigInt(listed.size()), multinomial(a.parts()));
    }
  }
}

TEST(Members, ZeroPartsAndEmpty) {
  EXPECT_EQ(members(Composition{0, 2}).size(), 1u);
  EXPECT_EQ(members(Composition{}).size(), 1u);
  EXPECT_EQ(members(Composition{2, 1}),
            (std::vector<Permutation>{Permutation::from_word("213"), Permutation::from_word("312"),
                                      Permutation::from_word("321")}));
}

TEST(CountDj, Examples) {
  EXPECT_EQ(count_Dj(Composition{2, 1}, 1), 2);
  EXPECT_EQ(count_Dj(Composition{4, 2}, 1), 9);
  EXPECT_EQ(count_Dj(Composition{4, 2}, 2), 7);
  EXPECT_EQ(count_Dj(Composition{2, 2}, 2), 3);
  EXPECT_EQ(count_Dj(Composition::ones(5), 5), 44);
  EXPECT_EQ(count_Dj(Composition{3}, 1), 0);
  EXPECT_THROW(count_Dj(Composition{2, 1}, 3), std::out_of_range);
}

TEST(CountDj, AllAtOnceAgreesWithSingle) {
  const Composition a{3, 1, 2};
  const auto all = count_Dj_all(a);
  ASSERT_EQ(all.size(), 4u);
  for (int j = 0; j <= 3; ++j) EXPECT_EQ(all[j], count_Dj(a, j));
}

TEST(CountStarHat, Examples) {
  EXPECT_EQ(count_Dstar(Composition{4, 2}, 2), 2);
  EXPECT_EQ(count_Dhat(Composition{2, 1}, 2), 1);
  EXPECT_THROW(count_Dstar(Composition{4, 2}, 0), std::out_of_range);
  EXPECT_THROW(count_Dhat(Composition{4, 2}, 3), std::out_of_range);
}

TEST(CountStarHat, MatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : compositions_of(n)) {
      for (int j = 1; j <= a.blocks(); ++j) {
        ASSERT_EQ(count_Dstar(a, j), oracle::Dstar(parts_of(a), j)) << a.to_string();
        ASSERT_EQ(count_Dhat(a, j), oracle::Dhat(parts_of(a), j)) << a.to_string();
      }
    }
  }
}

TEST(CountDj, SplitsIntoDjAndDstar) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Composition a(oracle::random_composition(rng, 1 + static_cast<int>(rng() % 8)));
    for (int j = 1; j <= a.blocks(); ++j) ASSERT_EQ(count_Dj(a, j - 1), count_Dj(a, j) + count_Dstar(a, j));
  }
}

TEST(BlockFixedPoint, Examples) {
  EXPECT_EQ(insert_block_fixed_point(Permutation::from_word("21"), Composition{2}, 1), Permutation::from_word("321"));
  EXPECT_EQ(remove_block_fixed_point(Permutation::from_word("321"), Composition{3}, 1), Permutation::from_word("21"));
  EXPECT_EQ(insert_block_fixed_point(Permutation::from_word("312"), Composition::ones(3), 2),
            Permutation::from_word("4213"));
  EXPECT_EQ(insert_block_fixed_point(Permutation::from_word("21"), Composition{2, 0}, 2), Permutation::from_word("213"));
  EXPECT_EQ(excedance_boundary(Permutation::from_word("21"), Composition{2}, 1), 2);
  EXPECT_EQ(excedance_boundary(Permutation::from_word("3412"), Composition{2, 2}, 1), 3);
  EXPECT_THROW(insert_block_fixed_point(Permutation::from_word("321"), Composition{3}, 1), std::invalid_argument);
  EXPECT_THROW(remove_block_fixed_point(Permutation::from_word("21"), Composition{2}, 1), std::invalid_argument);
}

TEST(BlockFixedPoint, BijectionOntoStarSet) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : compositions_of(n)) {
      for (int j = 1; j <= a.blocks(); ++j) {
        const auto grown = a.with_part(j, a.part(j) + 1);
        std::set<Permutation> images;
        for (const auto& p : members(a)) {
          if (!no_fixed_points_in_first_blocks(p, a, j)) continue;
          const auto q = insert_block_fixed_point(p, a, j);
          ASSERT_TRUE(is_member(q, grown));
          ASSERT_TRUE(no_fixed_points_in_first_blocks(q, grown, j - 1));
          ASSERT_FALSE(no_fixed_points_in_first_blocks(q, grown, j));
          ASSERT_EQ(remove_block_fixed_point(q, grown, j), p);
          images.insert(q);
        }
        ASSERT_EQ(BigInt(images.size()), count_Dj(a, j));
        ASSERT_EQ(BigInt(images.size()), count_Dstar(grown, j));
        ASSERT_EQ(count_Dhat(grown, j), count_Dj(a, a.blocks()));
      }
    }
  }
}

TEST(Preimage, Examples) {
  EXPECT_EQ(count_sorted_derangement_preimage(Composition{4, 2}), 336);
  EXPECT_EQ(count_sorted_derangement_preimage(Composition::ones(4)), 9);
  EXPECT_EQ(count_sorted_derangement_preimage(Composition::ones(6)), 265);
  EXPECT_EQ(count_sorted_derangement_preimage(Composition{2}), 2);
  EXPECT_EQ(count_sorted_derangement_preimage(Composition{3}), 0);
  EXPECT_EQ(count_sorted_derangement_preimage(Composition{}), 1);
}

TEST(Preimage, MatchesOracleAndProductFormula) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : compositions_of(n)) {
      const auto preimage = count_sorted_derangement_preimage(a);
      ASSERT_EQ(preimage, oracle::sorted_preimage(parts_of(a))) << a.to_string();
      BigInt sizes = 1;
      for (int part : a.parts()) sizes *= factorial(part);
      ASSERT_EQ(preimage, sizes * count_Dj(a, a.blocks()));
    }
  }
}

TEST(FixDistribution, ExamplesAndSums) {
  EXPECT_EQ(fix_distribution(3).counts, (std::vector<BigInt>{2, 3, 0, 1}));
  EXPECT_EQ(fix_distribution(0).counts, (std::vector<BigInt>{1}));
  for (int n = 1; n <= 7; ++n) {
    const auto d = fix_distribution(n);
    BigInt sum = 0;
    for (const auto& c : d.counts) sum += c;
    EXPECT_EQ(sum, factorial(n));
    EXPECT_EQ(d.counts[n - 1], 0);
    const auto brute = oracle::fix_polynomial(n);
    for (std::size_t j = 0; j < brute.size(); ++j) EXPECT_EQ(d.counts[j], brute[j]);
  }
  EXPECT_THROW(fix_distribution(-1), std::invalid_argument);
}
