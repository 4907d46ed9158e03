#pragma once

// Two-block counting functions behind the correlation between lying in S_a
// and sorting to a derangement, and the exhaustive check of that correlation
// over dominance-ordered compositions.
//
// F(a1, a2, s): linear orders of a - s elements of [a] together with
// [a + 1, a + s] (a = a1 + a2) whose block sort over (a1, a2) has no fixed
// point. G(a1, a2, s) = F / (a1! a2!).

#include <vector>

#include "derange/bigint.hpp"
#include "derange/permutation.hpp"

namespace derange::correlation {

struct BlockPairState {
  int a1 = 0;
  int a2 = 0;
  int s = 0;
  int a() const { return a1 + a2; }
  friend bool operator==(const BlockPairState&, const BlockPairState&) = default;
};

/// Exhaustive count over every subset and every order. Zero when any
/// argument is negative or s > a.
BigInt F_brute(const BlockPairState& st);

/// sum_{b1 <= a1, b2 <= a2} (-1)^{b1+b2} C(a - b1 - b2, s) C(a - b1 - b2, a1 - b1).
/// Zero when any argument is negative.
BigInt G_closed(const BlockPairState& st);

/// F(a1, a2, s) + F(a1, a2, s - 1).
BigInt H(const BlockPairState& st);

/// F_brute == a1! a2! G_closed.
bool FG_consistency(const BlockPairState& st);

/// s = 0: G(a1, a2) = G(a1 - 1, a2) + G(a1, a2 - 1) + (-1)^(a1 + a2), needs a1, a2 >= 1.
/// s >= 1: G(a1, a2, s) is the sum of G at (a1 - 1, a2) and (a1, a2 - 1)
/// with s and s - 1, needs a1 >= 1. Returns false outside those ranges.
bool G_recurrence_check(const BlockPairState& st);

/// Dominance order on decreasingly sorted parts. Throws
/// std::invalid_argument if the totals differ.
bool dominance_ge(const Composition& a, const Composition& b);

/// For every split a1 + a2 = a_total with a1 >= a2 >= 1, checks
/// F(a1 + 1, a2 - 1, s) >= F(a1, a2, s), exempting s = 0 with a1 even and
/// a2 = 1. With a nonempty `tail`, additionally checks that the block-sorted
/// derangement preimage of (a1 + 1, a2 - 1, tail) is at least that of
/// (a1, a2, tail), where only (even, 1) with an all-zero tail is exempt.
bool verify_unimodality(int a_total, int s, const Composition& tail = {});

struct PairResult {
  Composition a;
  Composition b;
  BigInt lhs;        // preimage count for a
  BigInt rhs;        // preimage count for b
  bool dominates;    // a >= b in dominance order; only these pairs are asserted
  bool comparable;   // a >= b or b >= a
  bool excluded;     // a >= b, but a is a single block of odd size
  bool ok;           // lhs >= rhs, or not asserted
};

struct CorrelationReport {
  int n = 0;
  std::vector<PairResult> pairs;  // every ordered pair, a-major in lex order
  std::size_t checked = 0;
  std::size_t excluded = 0;
  std::size_t skipped = 0;        // pairs with a not dominating b
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// Compares the block-sorted derangement preimages of every ordered pair of
/// positive-part compositions of n (n >= 1).
CorrelationReport verify_correlation(int n);

}  // namespace derange::correlation
