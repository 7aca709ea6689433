#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace stirling {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Natural log of a positive integer, accurate to the long double mantissa
/// (the top 64 bits are kept, the rest contribute through the exponent).
long double log_of(const BigInt& x);

/// Natural log of a positive rational.
long double log_of(const Rational& x);

/// Nearest long double to num/den for values inside the long double range.
long double to_long_double(const Rational& x);
long double to_long_double(const BigInt& x);

BigInt factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

std::string to_decimal(const BigInt& x);

}  // namespace stirling
