#pragma once

// Truncated multivariate power series with exact integer coefficients.
//
// A series carries per-variable degree caps fixed at construction; every
// stored exponent vector e satisfies 0 <= e_i <= cap_i and absent exponents
// are zero. Arithmetic between series with different caps is rejected rather
// than silently re-truncated.

#include <map>
#include <span>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/permutation.hpp"

namespace derange::series {

using Exponent = std::vector<int>;

class MultiSeries {
 public:
  explicit MultiSeries(std::vector<int> caps);

  std::span<const int> caps() const { return caps_; }
  int variables() const { return static_cast<int>(caps_.size()); }

  /// Zero for exponents outside the caps or not stored.
  BigInt coefficient(const Exponent& e) const;

  /// Throws std::out_of_range if e exceeds the caps. Setting zero erases.
  void set(const Exponent& e, BigInt value);

  std::size_t terms() const { return coeffs_.size(); }
  const std::map<Exponent, BigInt>& coefficients() const { return coeffs_; }

  bool within_caps(const Exponent& e) const;

  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

 private:
  std::vector<int> caps_;
  std::map<Exponent, BigInt> coeffs_;
};

MultiSeries series_one(std::vector<int> caps);

/// Truncated product. Throws std::invalid_argument on a cap mismatch.
MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b);

/// Expansion of 1 / (1 + x_i) for a 1-based variable index.
MultiSeries inv_one_plus_var(int i, std::vector<int> caps);

/// Expansion of 1 / (1 - x_1 - ... - x_k); the coefficient of x^e is the
/// multinomial (sum e)! / prod(e_i!).
MultiSeries inv_one_minus_sum(std::vector<int> caps);

/// 1 / ((1 + x_1) ... (1 + x_j) (1 - x_1 - ... - x_k)) truncated at caps a.
MultiSeries generating_function_Dj(const Composition& a, int j);

/// |D_j(a)| read off as the coefficient of x^a in generating_function_Dj.
/// Requires 0 <= j <= k.
BigInt coeff_Dj(const Composition& a, int j);

}  // namespace derange::series
