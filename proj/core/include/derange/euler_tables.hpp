#pragma once

// Euler's difference tables generalised to fixed point lambda-coloured
// permutations.
//
//   e^n_n = n!,   e^{k-1}_n = e^k_n + (lambda - 1) e^{k-1}_{n-1},
//   d^k_n = e^k_n / k!.
//
// For an integer lambda >= 0, d^k_n(lambda) counts D^k_n(lambda): permutations
// of [n] decreasing on their first k positions whose fixed points in (k, n]
// each carry one of lambda colours. The bijections below realise the
// recurrences between neighbouring entries on these sets; they need
// lambda >= 1.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/lambda_polynomial.hpp"
#include "derange/permutation.hpp"

namespace derange::euler {

class DifferenceTable {
 public:
  /// Throws std::logic_error if some e^k_n is not divisible by k!.
  static DifferenceTable build(int n_max);

  int n_max() const { return n_max_; }

  /// 0 <= k <= n <= n_max.
  const LambdaPolynomial& e(int n, int k) const;
  const LambdaPolynomial& d(int n, int k) const;

  /// d with the boundary conventions used by the recurrences: the row k = -1
  /// holds (lambda - 1)^{n+1} for n >= -1, and entries with k > n or n < 0
  /// (outside that row) are zero.
  LambdaPolynomial d_extended(int n, int k) const;

 private:
  int n_max_ = 0;
  std::vector<std::vector<LambdaPolynomial>> e_;
  std::vector<std::vector<LambdaPolynomial>> d_;
};

DifferenceTable build_tables(int n_max);

/// Membership in D^k_n(lambda), including the tail-scope convention.
bool in_Dkn(const ColouredPermutation& p, int n, int k, int lambda);

/// All of D^k_n(lambda) in lexicographic order of (word, colours).
std::vector<ColouredPermutation> enumerate_Dkn(int n, int k, int lambda);

// ---------------------------------------------------------------- bijections

/// An argument selected by a position or value index.
struct IndexArg {
  int index;
  ColouredPermutation perm;
  friend bool operator==(const IndexArg&, const IndexArg&) = default;
};

/// An argument carrying a non-default colour c in [2, lambda].
struct ColourArg {
  int colour;
  ColouredPermutation perm;
  friend bool operator==(const ColourArg&, const ColourArg&) = default;
};

using BranchArg = std::variant<IndexArg, ColourArg>;

/// theta: [k] x D^k_n  u  [2, lambda] x D^{k-1}_{n-1}  ->  D^{k-1}_n, 1 <= k <= n.
/// Index branch moves p_j to position k; colour branch inserts an essential
/// fixed point k.
ColouredPermutation theta(const BranchArg& arg, int k);
BranchArg theta_inverse(const ColouredPermutation& q, int k);

/// eta: [n] x D^k_{n-1}  u  [2, lambda] x D^{k-1}_{n-2}  ->  D^k_n.
///
/// Index branch inserts the value j right after position k, stepping over the
/// essential fixed points below j. Colour branch removes the essential fixed
/// points F, block-sorts the first k entries, inserts their former rank m at
/// k + 1 and a fixed point k + 1 of colour c in front of it, then puts F back
/// at F + 2. The index branch is onto the q whose essential run starting at
/// k + 1 is empty or followed by an entry on or above the diagonal; the colour
/// branch is onto the rest. The colour branch needs k >= 1.
ColouredPermutation eta(const BranchArg& arg, int k, int n);
BranchArg eta_inverse(const ColouredPermutation& q, int k);

struct Zeta1Arg {
  int j;
  int colour;  // 1 unless j == k + 1
  ColouredPermutation perm;
  friend bool operator==(const Zeta1Arg&, const Zeta1Arg&) = default;
};

/// zeta1: ({(j, 1) : j in [n]} u {(k + 1, c) : c in [2, lambda]}) x D^k_{n-1} -> D^k_n.
/// Onto, and two-to-one exactly on the image of zeta2.
ColouredPermutation zeta1(const Zeta1Arg& arg, int k);

/// Every zeta1 preimage of q (one or two).
std::vector<Zeta1Arg> zeta1_preimages(const ColouredPermutation& q, int k);

struct Zeta2Arg {
  int colour;  // in [2, lambda]
  int j;       // in [k + 2, n]
  ColouredPermutation perm;
  friend bool operator==(const Zeta2Arg&, const Zeta2Arg&) = default;
};

/// zeta2: [2, lambda] x [k + 2, n] x D^k_{n-2} -> D^k_n. Inserts an essential
/// fixed point k + 1 of colour c followed by an element j > k + 1.
ColouredPermutation zeta2(const Zeta2Arg& arg, int k);
std::optional<Zeta2Arg> zeta2_inverse(const ColouredPermutation& q, int k);

/// d^k_n(nu) = sum_j C(n - k, j) d^k_{n-j}(lambda) (nu - lambda)^j.
/// `column[m]` must hold d^k_m(lambda) for m = k..n (entries below k are
/// ignored); `shift` is nu - lambda.
template <class T>
T dkn_change_basis(int n, int k, const T& shift, std::span<const T> column) {
  T acc = T(0);
  T shift_power = T(1);
  for (int j = 0; j <= n - k; ++j) {
    acc += T(binomial(n - k, j)) * column[n - j] * shift_power;
    shift_power *= shift;
  }
  return acc;
}

}  // namespace derange::euler
