#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cfcolor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms, q > 0. Integers render as "p/1".
std::string to_fraction_string(const Rational& r);

// base^exp for a non-negative integer exponent.
Rational rational_pow(const Rational& base, unsigned exp);

BigInt bigint_pow(const BigInt& base, unsigned exp);

}  // namespace cfcolor
