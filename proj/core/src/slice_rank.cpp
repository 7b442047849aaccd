#include "strength/slice_rank.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace strength {
namespace {

using u128 = UInt128;

void require_n(std::int64_t n)
{
  if (n < 1) throw std::domain_error("n must be >= 1, got " + std::to_string(n));
}

void require_d(int d, int min_d)
{
  if (d < min_d) throw std::domain_error("d must be >= " + std::to_string(min_d) + ", got " + std::to_string(d));
}

// r(n+1-r) >= C(d+n-r, d). The binomial is built as C(x+1,1), C(x+2,2), ...,
// all integers and increasing, so we stop as soon as it passes the bound.
bool slice_rank_predicate(std::int64_t n, int d, std::int64_t r)
{
  const std::int64_t x = n - r;
  if (n > (std::int64_t{1} << 40)) {
    // Products below could leave 128 bits; take the slow exact route.
    const BigInt bound = to_big(r) * to_big(n + 1 - r);
    BigInt c = 1;
    for (int i = 1; i <= d; ++i) {
      c = c * to_big(x + i) / i;
      if (c > bound) return false;
    }
    return true;
  }
  const u128 bound = static_cast<u128>(r) * static_cast<u128>(n + 1 - r);
  u128 c = 1;
  for (int i = 1; i <= d; ++i) {
    c = c * static_cast<u128>(x + i) / static_cast<u128>(i);
    if (c > bound) return false;
  }
  return true;
}

// Smallest scaled integer s with s^k >= v; i.e. ceil of the k-th root.
BigInt ceil_root(const BigInt& v, unsigned k)
{
  BigInt s;
  const int exact = mpz_root(s.get_mpz_t(), v.get_mpz_t(), k);
  if (!exact) s += 1;
  return s;
}

BigInt floor_root(const BigInt& v, unsigned k)
{
  BigInt s;
  mpz_root(s.get_mpz_t(), v.get_mpz_t(), k);
  return s;
}

constexpr unsigned kRootScaleBits = 16;

// (d!n)^(1/(d-1)) bracketed on a 2^-16 grid.
Rational scaled_root(const BigInt& dfact_n, int d, bool round_up)
{
  const unsigned k = static_cast<unsigned>(d - 1);
  const BigInt scale = BigInt(1) << kRootScaleBits;
  const BigInt v = dfact_n * pow(scale, k);
  return to_rational(round_up ? ceil_root(v, k) : floor_root(v, k), scale);
}

bool condition_wide(const BigInt& n, int d)
{
  const BigInt dn = factorial(static_cast<unsigned>(d)) * n;
  if (dn < pow(BigInt(d), static_cast<unsigned>(d - 1))) return false;
  return pow(dn, static_cast<unsigned>(d - 3)) >=
         pow(factorial(static_cast<unsigned>(d - 1)), static_cast<unsigned>(d - 1));
}

bool condition_narrow(const BigInt& n, int d)
{
  const BigInt dfact = factorial(static_cast<unsigned>(d));
  const BigInt dn = dfact * n;
  if (dn < pow(BigInt(d), static_cast<unsigned>(d - 1))) return false;
  // (d/2 - 1)^2 = (d-2)^2/4
  const Rational base = to_rational(dfact * 4, BigInt(d - 2) * (d - 2));
  return Rational(pow(dn, static_cast<unsigned>(d - 4))) >= pow(base, static_cast<unsigned>(d - 1));
}

}  // namespace

BigInt fano_delta(std::int64_t n, int d, std::int64_t r)
{
  require_n(n);
  require_d(d, 3);
  if (r < 0) throw std::domain_error("fano_delta: r must be >= 0");
  return BigInt(to_big(r + 1) * to_big(n - r)) - binom(d + r, d);
}

std::int64_t general_slice_rank(std::int64_t n, int d)
{
  require_n(n);
  require_d(d, 2);
  if (d == 2) return (n + 2) / 2;
  // The predicate is monotone in r on [0, n] and holds at r = n.
  std::int64_t lo = 0, hi = n;  // pred(lo) false (r = 0 never works), pred(hi) true
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (slice_rank_predicate(n, d, mid)) hi = mid; else lo = mid;
  }
  return hi;
}

std::int64_t simultaneous_slice_rank(std::int64_t n, const DegreeProfile& profile)
{
  require_n(n);
  if (profile.empty()) throw std::domain_error("simultaneous_slice_rank: empty profile");
  if (profile.min_degree() < 3) throw std::domain_error("simultaneous_slice_rank: degrees must be >= 3");
  // Not monotone in r in general, so scan; r = n+1 always satisfies it.
  for (std::int64_t r = 0; r <= n + 1; ++r) {
    BigInt rhs = 0;
    for (int di : profile.degrees()) rhs += binom(di + n - r, di);
    if (BigInt(to_big(r) * to_big(n + 1 - r)) >= rhs) return r;
  }
  return n + 1;
}

Rational root_poly_eval(std::int64_t n, int d, const Rational& x)
{
  Rational prod = 1;
  for (int i = 2; i <= d; ++i) prod *= x + i;
  return prod - Rational(factorial(static_cast<unsigned>(d))) * (Rational(to_big(n)) - x);
}

bool lower_bound_condition_wide(const BigInt& n, int d)
{
  require_d(d, 4);
  return condition_wide(n, d);
}

bool lower_bound_condition_narrow(const BigInt& n, int d)
{
  require_d(d, 5);
  return condition_narrow(n, d);
}

bool lower_bound_condition_wide(std::int64_t n, int d) { return lower_bound_condition_wide(to_big(n), d); }
bool lower_bound_condition_narrow(std::int64_t n, int d) { return lower_bound_condition_narrow(to_big(n), d); }

Rational choose_w(int d)
{
  require_d(d, 3);
  if (d <= 5) return Rational(d + 2);
  return to_rational(d + 2, 2);
}

RootBound root_poly_floor(std::int64_t n, int d)
{
  require_n(n);
  require_d(d, 3);
  RootBound out;
  out.w = choose_w(d);

  const BigInt dn = factorial(static_cast<unsigned>(d)) * to_big(n);
  out.upper = scaled_root(dn, d, true) - 2;
  if (root_poly_eval(n, d, out.upper) <= 0)
    throw std::logic_error("root_poly_floor: upper bound failed certification");

  // p(0) <= 0 < p(upper); bisect on integers for the last nonpositive point.
  std::int64_t lo = 0;
  std::int64_t hi = to_int64(ceil(out.upper));
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (root_poly_eval(n, d, Rational(to_big(mid))) <= 0) lo = mid; else hi = mid;
  }
  out.floor_a = lo;

  std::optional<Rational> offset;
  if (d >= 5 && condition_narrow(to_big(n), d)) offset = to_rational(d + 2, 2);
  else if (d >= 4 && condition_wide(to_big(n), d)) offset = Rational(d + 2);
  if (offset) {
    Rational lower = scaled_root(dn, d, false) - *offset;
    if (root_poly_eval(n, d, lower) >= 0)
      throw std::logic_error("root_poly_floor: lower bound failed certification");
    out.lower = lower;
  }
  return out;
}

std::vector<std::int64_t> plateau_set(int d, std::int64_t N)
{
  require_d(d, 3);
  if (N < 1) throw std::domain_error("plateau_set: N must be >= 1");
  const BigInt dfact = factorial(static_cast<unsigned>(d));
  std::vector<std::int64_t> out;
  // n_k = k + ceil((k+2)...(k+d)/d!) is the first n with defect >= k; the
  // defect climbs by exactly one there, so n_k - 1 is a plateau point.
  for (std::int64_t k = 1;; ++k) {
    BigInt prod = 1;
    for (int i = 2; i <= d; ++i) prod *= to_big(k + i);
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), prod.get_mpz_t(), dfact.get_mpz_t());
    const BigInt point = q + to_big(k) - 1;
    if (point > to_big(N)) break;
    out.push_back(to_int64(point));
  }
  return out;
}

}  // namespace strength
