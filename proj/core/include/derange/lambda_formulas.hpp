#pragma once

// Lambda-factorials f_lambda(n) = sum over S_n of lambda^fix(p), and the
// alternating sums over 0 <= b <= a that count D(a) and its block-sorted
// preimage.

#include <span>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/lambda_polynomial.hpp"
#include "derange/permutation.hpp"

namespace derange::lambda {

/// f_lambda(n) via f(n) = n f(n-1) + (lambda - 1)^n, f(0) = 1.
LambdaPolynomial lambda_factorial(int n);

/// f_lambda(0..n_max).
std::vector<LambdaPolynomial> lambda_factorial_table(int n_max);

/// n! * sum_{j <= n} (lambda - 1)^j / j!, with n!/j! taken as a falling
/// factorial so that no rational ever appears.
LambdaPolynomial lambda_factorial_truncexp(int n);

/// f_nu(n) = sum_j C(n, j) f_lambda(n - j) (nu - lambda)^j.
///
/// `table[m]` must hold f_lambda(m) for m = 0..n; `shift` is nu - lambda.
/// T is BigInt for numeric lambda and nu, or LambdaPolynomial when the table
/// is symbolic in lambda.
template <class T>
T change_basis(int n, const T& shift, std::span<const T> table) {
  T acc = T(0);
  T shift_power = T(1);
  for (int j = 0; j <= n; ++j) {
    acc += T(binomial(n, j)) * table[n - j] * shift_power;
    shift_power *= shift;
  }
  return acc;
}

/// Numeric convenience: f_nu(n) from the values f_lambda(0..n).
BigInt change_basis(int n, const BigInt& nu, const BigInt& lambda, std::span<const BigInt> f_lambda_values);

/// True iff d/dlambda f_lambda(n) == n f_lambda(n - 1) as polynomials.
bool poly_derivative_check(int n);

/// |D(a)| = sum_{0<=b<=a} (-1)^{|b|} (n - |b|)! / prod (a_i - b_i)!.
BigInt explicit_D_count(const Composition& a);

/// sum_{0<=b<=a} (-1)^{|b|} f_lambda(n - |b|) prod C(a_i, b_i) f_lambda(b_i),
/// kept symbolic in lambda. Its constant value is |Phi_a^{-1}(D(a))|.
LambdaPolynomial lamfak_rhs(const Composition& a);

/// The lambda = 0 specialisation: |D(a)| from derangement numbers,
/// (1 / prod a_i!) sum (-1)^{|b|} D_{n-|b|} prod C(a_i, b_i) D_{b_i}.
/// Throws std::logic_error if the final division is inexact.
BigInt derangement_basis_count(const Composition& a);

/// Number of index vectors b whose term in derangement_basis_count can be
/// nonzero, i.e. prod C(a_i, b_i) D_{b_i} != 0. Adding blocks of length one
/// leaves it unchanged because D_1 = 0.
std::size_t derangement_basis_term_count(const Composition& a);

/// The double sum over c in {0,1}^k and 0 <= b <= a - c
///   sum (-1)^{|b|} f_lambda(n - |c| - |b|) prod C(a_i - c_i, b_i) f_lambda(b_i) mu_i^{c_i}
/// evaluated at an integer lambda. The value does not depend on lambda.
BigInt mu_coloured_count(const Composition& a, std::span<const int> mu, const BigInt& lambda);

/// Derangement numbers D_0..D_n.
std::vector<BigInt> derangement_numbers(int n_max);

}  // namespace derange::lambda
