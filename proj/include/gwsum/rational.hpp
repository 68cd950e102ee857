#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gwsum {

// GMP values are kept canonical (lowest terms, positive denominator) by every
// gmpxx arithmetic operator; the helpers below restore that after raw
// construction.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "num/den" or a bare integer. Throws Error(ParseError).
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

bool is_integer(const Rational& q);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

}  // namespace gwsum
