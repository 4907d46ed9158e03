#include "derange/lambda_formulas.hpp"

#include <functional>
#include <stdexcept>

namespace derange::lambda {

namespace {

// Visits every b with 0 <= b <= bound componentwise.
void for_each_bounded(std::span<const int> bound, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> b(bound.size(), 0);
  while (true) {
    visit(b);
    std::size_t i = 0;
    while (i < b.size() && b[i] == bound[i]) b[i++] = 0;
    if (i == b.size()) return;
    ++b[i];
  }
}

int sum_of(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

}  // namespace

LambdaPolynomial lambda_factorial(int n) { return lambda_factorial_table(n).back(); }

std::vector<LambdaPolynomial> lambda_factorial_table(int n_max) {
  if (n_max < 0) throw std::invalid_argument("negative size");
  std::vector<LambdaPolynomial> table{LambdaPolynomial(1)};
  for (int n = 1; n <= n_max; ++n) {
    table.push_back(LambdaPolynomial(n) * table.back() + LambdaPolynomial::shifted_power(-1, n));
  }
  return table;
}

LambdaPolynomial lambda_factorial_truncexp(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  LambdaPolynomial acc;
  BigInt falling = 1;  // n! / j! for the current j, walking j downwards
  for (int j = n; j >= 0; --j) {
    acc += LambdaPolynomial(falling) * LambdaPolynomial::shifted_power(-1, j);
    falling *= j;
  }
  return acc;
}

BigInt change_basis(int n, const BigInt& nu, const BigInt& lambda, std::span<const BigInt> f_lambda_values) {
  if (static_cast<int>(f_lambda_values.size()) < n + 1) throw std::invalid_argument("table too short");
  return change_basis<BigInt>(n, nu - lambda, f_lambda_values);
}

bool poly_derivative_check(int n) {
  if (n < 1) throw std::invalid_argument("derivative check needs n >= 1");
  const auto table = lambda_factorial_table(n);
  return table[n].derivative() == LambdaPolynomial(n) * table[n - 1];
}

BigInt explicit_D_count(const Composition& a) {
  BigInt acc = 0;
  std::vector<int> remaining(a.blocks());
  for_each_bounded(a.parts(), [&](const std::vector<int>& b) {
    const int taken = sum_of(b);
    for (int i = 0; i < a.blocks(); ++i) remaining[i] = a.parts()[i] - b[i];
    const BigInt term = multinomial(remaining);  // (n - |b|)! / prod (a_i - b_i)!
    acc += (taken % 2 == 0) ? term : BigInt(-term);
  });
  return acc;
}

LambdaPolynomial lamfak_rhs(const Composition& a) {
  const int n = a.total();
  const auto f = lambda_factorial_table(n);
  LambdaPolynomial acc;
  for_each_bounded(a.parts(), [&](const std::vector<int>& b) {
    const int taken = sum_of(b);
    LambdaPolynomial term = f[n - taken];
    BigInt scalar = 1;
    for (int i = 0; i < a.blocks(); ++i) {
      scalar *= binomial(a.parts()[i], b[i]);
      if (b[i] > 0) term *= f[b[i]];
    }
    term *= LambdaPolynomial(taken % 2 == 0 ? scalar : BigInt(-scalar));
    acc += term;
  });
  return acc;
}

std::vector<BigInt> derangement_numbers(int n_max) {
  std::vector<BigInt> d{1};
  for (int n = 1; n <= n_max; ++n) d.push_back(n * d.back() + (n % 2 == 0 ? 1 : -1));
  return d;
}

BigInt derangement_basis_count(const Composition& a) {
  const int n = a.total();
  const auto d = derangement_numbers(n);
  BigInt acc = 0;
  for_each_bounded(a.parts(), [&](const std::vector<int>& b) {
    const int taken = sum_of(b);
    BigInt term = d[n - taken];
    for (int i = 0; i < a.blocks(); ++i) term *= binomial(a.parts()[i], b[i]) * d[b[i]];
    acc += (taken % 2 == 0) ? term : BigInt(-term);
  });
  BigInt denominator = 1;
  for (int part : a.parts()) denominator *= factorial(part);
  if (acc % denominator != 0) throw std::logic_error("derangement-basis sum not divisible by prod a_i!");
  return acc / denominator;
}

std::size_t derangement_basis_term_count(const Composition& a) {
  std::size_t count = 0;
  for_each_bounded(a.parts(), [&](const std::vector<int>& b) {
    bool nonzero = true;
    for (int bi : b) nonzero = nonzero && bi != 1;
    count += nonzero;
  });
  return count;
}

BigInt mu_coloured_count(const Composition& a, std::span<const int> mu, const BigInt& lambda) {
  const int k = a.blocks();
  if (static_cast<int>(mu.size()) != k) throw std::invalid_argument("one colour count per block required");
  for (int m : mu) {
    if (m < 0) throw std::invalid_argument("colour counts must be nonnegative");
  }
  const int n = a.total();
  std::vector<BigInt> f;
  for (const auto& poly : lambda_factorial_table(n)) f.push_back(poly.evaluate(lambda));

  BigInt acc = 0;
  const std::vector<int> ones(k, 1);
  std::vector<int> reduced(k);
  for_each_bounded(ones, [&](const std::vector<int>& c) {
    for (int i = 0; i < k; ++i) {
      if (c[i] > a.parts()[i]) return;
      reduced[i] = a.parts()[i] - c[i];
    }
    BigInt colour_weight = 1;
    for (int i = 0; i < k; ++i) {
      if (c[i] == 1) colour_weight *= mu[i];
    }
    if (colour_weight == 0) return;
    const int removed = sum_of(c);
    for_each_bounded(reduced, [&](const std::vector<int>& b) {
      const int taken = sum_of(b);
      BigInt term = f[n - removed - taken] * colour_weight;
      for (int i = 0; i < k; ++i) term *= binomial(reduced[i], b[i]) * f[b[i]];
      acc += (taken % 2 == 0) ? term : BigInt(-term);
    });
  });
  return acc;
}

}  // namespace derange::lambda
