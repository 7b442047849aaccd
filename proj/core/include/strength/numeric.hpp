#pragma once

// Exact integer and rational types shared by every module.

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace strength {

using BigInt = mpz_class;
using Rational = mpq_class;

__extension__ typedef __int128 Int128;
__extension__ typedef unsigned __int128 UInt128;

BigInt to_big(std::int64_t v);
Rational to_rational(std::int64_t num, std::int64_t den = 1);
// Canonicalised num/den; throws on a zero denominator.
Rational to_rational(const BigInt& num, const BigInt& den);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& v);
bool fits_int64(const BigInt& v);

BigInt factorial(unsigned k);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

int sign(const BigInt& v);
int sign(const Rational& q);

std::string to_string(const BigInt& v);
// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
// Fixed-point decimal rendering, truncated toward zero after `digits` places.
std::string to_decimal(const Rational& q, unsigned digits);

}  // namespace strength
