#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace torelli {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with q > 0 and gcd 1; integers render as "p/1".
std::string to_fraction(const Rational& r);
Rational parse_fraction(const std::string& text);
// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& r, int digits = 12);

int ceil_div(int a, int b);
int floor_div(int a, int b);

}  // namespace torelli
