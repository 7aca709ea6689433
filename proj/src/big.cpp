#include "stirling/big.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace stirling {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

// x = mantissa * 2^exponent with mantissa holding the leading 64 bits.
struct Split {
  long double mantissa;
  long long exponent;
};

Split split_top_bits(const BigInt& x) {
  const mpz_srcptr z = x.backend().data();
  const std::size_t bits = mpz_sizeinbase(z, 2);
  if (bits <= 64) {
    mpz_t lo;
    mpz_init_set(lo, z);
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, lo);
    mpz_clear(lo);
    return {static_cast<long double>(v), 0};
  }
  const std::size_t shift = bits - 64;
  mpz_t top;
  mpz_init(top);
  mpz_tdiv_q_2exp(top, z, shift);
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, top);
  mpz_clear(top);
  return {static_cast<long double>(v), static_cast<long long>(shift)};
}

}  // namespace

long double log_of(const BigInt& x) {
  if (x <= 0) {
    throw std::domain_error("log_of: argument must be positive");
  }
  const Split s = split_top_bits(x);
  return std::log(s.mantissa) + static_cast<long double>(s.exponent) * kLn2;
}

long double log_of(const Rational& x) {
  if (x <= 0) {
    throw std::domain_error("log_of: argument must be positive");
  }
  return log_of(BigInt(numerator(x))) - log_of(BigInt(denominator(x)));
}

long double to_long_double(const Rational& x) {
  if (x == 0) {
    return 0.0L;
  }
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  const Split a = split_top_bits(abs(num));
  const Split b = split_top_bits(den);
  const long double r = std::ldexp(a.mantissa / b.mantissa, static_cast<int>(a.exponent - b.exponent));
  return num < 0 ? -r : r;
}

long double to_long_double(const BigInt& x) { return to_long_double(Rational(x)); }

BigInt factorial(unsigned n) {
  BigInt f = 1;
  mpz_fac_ui(f.backend().data(), n);
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  BigInt c;
  mpz_bin_uiui(c.backend().data(), n, k);
  return c;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace stirling
