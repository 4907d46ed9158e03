#pragma once

#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace derange {

// Every count in the library is exact; there is no floating point anywhere
// on a counting path.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// Zero whenever k < 0, k > n or n < 0.
BigInt binomial(int n, int k);

// (sum parts)! / prod(parts!). Parts must be nonnegative.
BigInt multinomial(std::span<const int> parts);

// Integer power with a nonnegative exponent; 0^0 = 1.
BigInt power(const BigInt& base, int exponent);

std::string to_decimal(const BigInt& value);

// Accepts an optional leading '-' followed by decimal digits.
BigInt parse_decimal(std::string_view text);

}  // namespace derange
