#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace freiman {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt pow2(unsigned exp) { return BigInt(1) << exp; }

// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

// Parses "num/den" or "num".
Rational parse_rational(const std::string& text);

// Smallest n >= 0 with n*n >= r (r >= 0).
BigInt ceil_sqrt(const Rational& r);

// Smallest n >= 0 with n*n >= v.
BigInt ceil_sqrt(const BigInt& v);

double to_double(const Rational& r);

}  // namespace freiman
