#include "strength/numeric.hpp"

#include <stdexcept>

namespace strength {

BigInt to_big(std::int64_t v)
{
  BigInt out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

Rational to_rational(std::int64_t num, std::int64_t den)
{
  if (den == 0) throw std::domain_error("to_rational: zero denominator");
  Rational q(to_big(num), to_big(den));
  q.canonicalize();
  return q;
}

Rational to_rational(const BigInt& num, const BigInt& den)
{
  if (den == 0) throw std::domain_error("to_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool fits_int64(const BigInt& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

std::int64_t to_int64(const BigInt& v)
{
  if (!fits_int64(v)) throw std::overflow_error("to_int64: value exceeds 64 bits");
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

BigInt factorial(unsigned k)
{
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

BigInt floor(const Rational& q)
{
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& q)
{
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational pow(const Rational& base, unsigned exponent)
{
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

BigInt pow(const BigInt& base, unsigned exponent)
{
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

int sign(const BigInt& v) { return sgn(v); }
int sign(const Rational& q) { return sgn(q); }

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& q)
{
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::string to_decimal(const Rational& q, unsigned digits)
{
  const bool negative = sgn(q) < 0;
  Rational a = abs(q);
  BigInt scale = pow(BigInt(10), digits);
  BigInt scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), BigInt(a.get_num() * scale).get_mpz_t(), a.get_den_mpz_t());
  std::string s = scaled.get_str(10);
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

}  // namespace strength
