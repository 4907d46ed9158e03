#pragma once

#include <string>
#include <vector>

#include "derange/bigint.hpp"

namespace derange {

/// Exact integer polynomial in one variable lambda. Coefficients are stored
/// constant term first with trailing zeros trimmed; the zero polynomial has
/// no coefficients and degree -1.
class LambdaPolynomial {
 public:
  LambdaPolynomial() = default;
  explicit LambdaPolynomial(std::vector<BigInt> coeffs);
  LambdaPolynomial(int constant);  // NOLINT(google-explicit-constructor)
  LambdaPolynomial(const BigInt& constant);  // NOLINT(google-explicit-constructor)

  /// The polynomial lambda.
  static LambdaPolynomial variable();

  /// (lambda + shift)^exponent.
  static LambdaPolynomial shifted_power(int shift, int exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return degree() <= 0; }

  /// Zero for indices beyond the degree.
  BigInt coefficient(int power) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& lambda) const;

  /// Composition p(q(lambda)).
  LambdaPolynomial compose(const LambdaPolynomial& inner) const;

  LambdaPolynomial derivative() const;

  /// Divides every coefficient by d; throws std::domain_error if any division
  /// leaves a remainder.
  LambdaPolynomial divide_exact(const BigInt& d) const;

  LambdaPolynomial pow(int exponent) const;

  /// Coefficients as decimal strings, constant term first.
  std::vector<std::string> to_strings() const;

  /// Human-readable form such as "L^2 + 1".
  std::string to_string() const;

  LambdaPolynomial& operator+=(const LambdaPolynomial& rhs);
  LambdaPolynomial& operator-=(const LambdaPolynomial& rhs);
  LambdaPolynomial& operator*=(const LambdaPolynomial& rhs);

  friend LambdaPolynomial operator+(LambdaPolynomial a, const LambdaPolynomial& b) { return a += b; }
  friend LambdaPolynomial operator-(LambdaPolynomial a, const LambdaPolynomial& b) { return a -= b; }
  friend LambdaPolynomial operator*(LambdaPolynomial a, const LambdaPolynomial& b) { return a *= b; }
  friend LambdaPolynomial operator-(const LambdaPolynomial& a) { return LambdaPolynomial() - a; }

  friend bool operator==(const LambdaPolynomial&, const LambdaPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace derange
