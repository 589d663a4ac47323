#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigmarho {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. cpp_rational keeps the canonical form the rest of
// the code relies on: lowest terms, denominator > 0, zero as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Number of bits in |x|; bit_length(0) == 1 so every stored value counts.
int bit_length(const BigInt& x);

// "num/den" with "/den" omitted when den == 1, e.g. "-5", "7/2".
std::string rational_to_string(const Rational& r);

// Inverse of rational_to_string. Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

}  // namespace sigmarho
