#include "derange/lambda_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace derange {

LambdaPolynomial::LambdaPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LambdaPolynomial::LambdaPolynomial(int constant) : LambdaPolynomial(BigInt(constant)) {}

LambdaPolynomial::LambdaPolynomial(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LambdaPolynomial LambdaPolynomial::variable() { return LambdaPolynomial(std::vector<BigInt>{0, 1}); }

LambdaPolynomial LambdaPolynomial::shifted_power(int shift, int exponent) {
  // Binomial expansion of (lambda + shift)^exponent.
  if (exponent < 0) throw std::domain_error("negative exponent");
  std::vector<BigInt> coeffs(exponent + 1);
  for (int i = 0; i <= exponent; ++i) {
    coeffs[i] = binomial(exponent, i) * power(BigInt(shift), exponent - i);
  }
  return LambdaPolynomial(std::move(coeffs));
}

BigInt LambdaPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

BigInt LambdaPolynomial::evaluate(const BigInt& lambda) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

LambdaPolynomial LambdaPolynomial::compose(const LambdaPolynomial& inner) const {
  LambdaPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + LambdaPolynomial(*it);
  return acc;
}

LambdaPolynomial LambdaPolynomial::derivative() const {
  std::vector<BigInt> coeffs;
  for (int i = 1; i <= degree(); ++i) coeffs.push_back(coeffs_[i] * i);
  return LambdaPolynomial(std::move(coeffs));
}

LambdaPolynomial LambdaPolynomial::divide_exact(const BigInt& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  std::vector<BigInt> coeffs = coeffs_;
  for (auto& c : coeffs) {
    if (c % d != 0) throw std::domain_error("inexact polynomial division");
    c /= d;
  }
  return LambdaPolynomial(std::move(coeffs));
}

LambdaPolynomial LambdaPolynomial::pow(int exponent) const {
  if (exponent < 0) throw std::domain_error("negative exponent");
  LambdaPolynomial acc(1);
  for (int i = 0; i < exponent; ++i) acc *= *this;
  return acc;
}

std::vector<std::string> LambdaPolynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_decimal(c));
  return out;
}

std::string LambdaPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt magnitude = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || i == 0) out += to_decimal(magnitude);
    if (i >= 1) out += "L";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

LambdaPolynomial& LambdaPolynomial::operator+=(const LambdaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator-=(const LambdaPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator*=(const LambdaPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

void LambdaPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace derange
