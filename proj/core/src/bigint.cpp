#include "derange/bigint.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace derange {

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt multinomial(std::span<const int> parts) {
  BigInt result = 1;
  int running = 0;
  for (int part : parts) {
    if (part < 0) throw std::domain_error("multinomial with a negative part");
    running += part;
    result *= binomial(running, part);
  }
  return result;
}

BigInt power(const BigInt& base, int exponent) {
  if (exponent < 0) throw std::domain_error("negative exponent");
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("not a decimal integer: " + std::string(text));
    }
  }
  return BigInt(std::string(text));
}

}  // namespace derange
