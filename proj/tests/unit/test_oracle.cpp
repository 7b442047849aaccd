#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "strength/hilbert_oracle.hpp"

using namespace strength;

namespace {

bool trial_division_prime(std::uint64_t v)
{
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f)
    if (v % f == 0) return false;
  return true;
}

OracleResult hf(std::int64_t n, std::vector<int> degrees, int d, bool absorb = true, std::uint64_t seed = 1)
{
  OracleQuery q;
  q.n = n;
  q.profile = DegreeProfile(std::move(degrees));
  q.d = d;
  q.seed = seed;
  q.absorb_linear = absorb;
  return random_ideal_hf(q);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("primality")
{
  for (std::uint64_t v = 0; v < 5000; ++v) CHECK(is_prime_u64(v) == trial_division_prime(v));
  CHECK(is_prime_u64(2147483647));
  CHECK(is_prime_u64(4294967291));
  CHECK_FALSE(is_prime_u64(4294967297));  // 641 * 6700417
  CHECK(is_prime_u64(18446744073709551557ull));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("small Hilbert functions")
{
  CHECK(hf(2, {2, 2}, 2).hf_value == 4);
  CHECK(hf(2, {2}, 4).hf_value == 9);
  for (std::int64_t n = 0; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) CHECK(hf(n, {}, d).hf_value == binom(n + d, d));
}

TEST_CASE("dimension accounting")
{
  for (const auto& degs : std::vector<std::vector<int>>{{2}, {2, 3}, {1, 2, 2}, {3, 3, 3, 3}, {1, 1, 1, 1, 1}}) {
    for (int d = 3; d <= 7; ++d) {
      const auto r = hf(3, degs, d);
      CHECK(r.hf_value + r.ideal_dim == binom(3 + d, d));
      CHECK(r.seeds_agree);
      CHECK(r.seeds_used.size() == r.ranks.size());
    }
  }
}

TEST_CASE("adding a generator never raises the Hilbert function")
{
  std::vector<int> degs;
  BigInt prev = binom(4 + 6, 6);
  for (int e : {2, 3, 2, 4, 3, 2, 5}) {
    degs.push_back(e);
    const auto cur = hf(4, degs, 6).hf_value;
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("absorbing linear forms matches the full matrix")
{
  for (const auto& degs : std::vector<std::vector<int>>{{1}, {1, 2}, {1, 1, 3}, {1, 2, 2, 2}, {1, 1, 1, 1}}) {
    for (int d = 3; d <= 6; ++d) {
      const auto a = hf(3, degs, d, true);
      const auto b = hf(3, degs, d, false);
      CHECK(a.hf_value == b.hf_value);
      CHECK(a.effective_n < 3);
      CHECK(b.effective_n == 3);
    }
  }
}

TEST_CASE("determinism")
{
  const auto a = hf(3, {2, 2, 3}, 5, true, 42);
  const auto b = hf(3, {2, 2, 3}, 5, true, 42);
  CHECK(a.ranks == b.ranks);
  CHECK(a.seeds_used == b.seeds_used);
}

TEST_CASE("query validation")
{
  OracleQuery q;
  q.n = 2;
  q.profile = DegreeProfile({2});
  q.d = 3;
  q.p = 2147483646;
  CHECK_THROWS_AS(random_ideal_hf(q), std::domain_error);
  q.p = 4294967311ull;  // prime, but too large for the fast path
  CHECK_THROWS_AS(random_ideal_hf(q), std::domain_error);
  q.p = kDefaultPrime;
  q.d = 1;
  CHECK_THROWS_AS(random_ideal_hf(q), std::domain_error);
  q.n = 10;
  q.d = 10;
  CHECK_THROWS_AS(random_ideal_hf(q), std::domain_error);
  q.n = 2;
  q.d = 3;
  q.p = 101;  // small primes still work, through the generic reduction
  CHECK(random_ideal_hf(q).hf_value == binom(5, 3) - 3);
}

TEST_CASE("known Froberg regimes")
{
  CHECK(check_sfc_known(3, DegreeProfile({2, 3, 4}), 6).verdict == SfcVerdict::pass);
  CHECK(check_sfc_known(2, DegreeProfile({3, 3, 3, 3}), 4).verdict == SfcVerdict::pass);
  const auto out = check_sfc_known(2, DegreeProfile({3, 3, 3, 3}), 6);
  CHECK(out.verdict == SfcVerdict::inconclusive);
  CHECK_FALSE(out.oracle_hf);
  CHECK(check_sfc_known(2, DegreeProfile({2, 2}), 2).predicted == 4);
}

TEST_CASE("tangent codimensions")
{
  const auto a = check_tangent_codim(3, EllProfile::make(4, {2, 0}));
  CHECK(a.oracle_hf == 1);
  CHECK(a.f_value == 1);
  CHECK(a.equal == std::optional<bool>(true));
  const auto b = check_tangent_codim(3, EllProfile::make(4, {1, 1}));
  CHECK(b.oracle_hf == 1);
  CHECK(b.f_value == 1);
  CHECK(b.equal == std::optional<bool>(true));
  const auto c = check_tangent_codim(5, EllProfile::make(4, {0, 2}));
  CHECK(c.equality_expected);
  CHECK(c.equal == std::optional<bool>(true));
  CHECK(c.geq);
}

}  // TEST_SUITE
