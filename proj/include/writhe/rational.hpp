#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace writhe {

/// Arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always normalized (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

double to_double(const Rational& value);

/// Polynomial with rational coefficients, lowest degree first.
using RationalPoly = std::vector<Rational>;

Rational evaluate(const RationalPoly& poly, const Rational& x);

BigInt factorial(unsigned m);

BigInt binomial(long long n, long long k);

}  // namespace writhe
