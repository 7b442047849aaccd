#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "strength/slice_rank.hpp"

using namespace strength;

namespace {

BigInt choose(std::int64_t a, std::int64_t b)
{
  if (b < 0 || a < b) return 0;
  BigInt c = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    c *= a - b + i;
    c /= i;
  }
  return c;
}

// Smallest r for which a general form vanishes on a codimension-r linear
// space, read off the Fano dimension count directly.
std::int64_t brute_slice_rank(std::int64_t n, int d)
{
  for (std::int64_t r = 0;; ++r)
    if (BigInt(r) * BigInt(n + 1 - r) >= choose(d + n - r, d)) return r;
}

// Largest integer x >= 0 with (x+d)...(x+2) <= d!(n-x).
std::int64_t brute_floor_root(std::int64_t n, int d)
{
  BigInt dfact = 1;
  for (int i = 2; i <= d; ++i) dfact *= i;
  std::int64_t x = 0;
  for (;; ++x) {
    BigInt prod = 1;
    for (int i = 2; i <= d; ++i) prod *= x + 1 + i;
    if (prod > dfact * BigInt(n - x - 1)) return x;
  }
}

// brute_slice_rank for n = 0..600, cached per degree.
const std::vector<std::int64_t>& brute_table(int d)
{
  static std::vector<std::vector<std::int64_t>> cache(11);
  auto& t = cache[static_cast<std::size_t>(d)];
  if (t.empty()) {
    t.push_back(0);
    for (std::int64_t n = 1; n <= 600; ++n) t.push_back(brute_slice_rank(n, d));
  }
  return t;
}

}  // namespace

TEST_SUITE("slicerank") {

TEST_CASE("Fano dimension counts")
{
  CHECK(fano_delta(3, 3, 1) == 0);
  CHECK(fano_delta(3, 4, 1) == -1);
  for (std::int64_t n = 1; n < 12; ++n) CHECK(fano_delta(n, 5, 0) == n - 1);
}

TEST_CASE("small slice ranks")
{
  CHECK(general_slice_rank(3, 2) == 2);
  CHECK(general_slice_rank(3, 4) == 3);
  CHECK(general_slice_rank(3, 3) == 2);
  CHECK(general_slice_rank(1, 9) == 1);
  CHECK_THROWS_AS(general_slice_rank(0, 3), std::domain_error);
  CHECK_THROWS_AS(general_slice_rank(3, 1), std::domain_error);
}

TEST_CASE("quadrics follow the closed form")
{
  for (std::int64_t n = 1; n <= 50; ++n) CHECK(general_slice_rank(n, 2) == (n + 2) / 2);
}

TEST_CASE("slice rank matches a linear scan")
{
  for (int d = 3; d <= 10; ++d)
    for (std::int64_t n = 1; n <= 600; ++n) CHECK(general_slice_rank(n, d) == brute_table(d)[static_cast<std::size_t>(n)]);
}

TEST_CASE("huge n goes through the exact fallback")
{
  const std::int64_t n = (std::int64_t{1} << 41) + 12345;
  const std::int64_t r = general_slice_rank(n, 3);
  CHECK(BigInt(r) * BigInt(n + 1 - r) >= choose(3 + n - r, 3));
  CHECK(BigInt(r - 1) * BigInt(n + 2 - r) < choose(3 + n - r + 1, 3));
}

TEST_CASE("simultaneous slice rank")
{
  CHECK(simultaneous_slice_rank(3, DegreeProfile({3, 3})) == 3);
  CHECK(simultaneous_slice_rank(5, DegreeProfile({3})) == 4);
  for (int d = 3; d <= 7; ++d)
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(simultaneous_slice_rank(n, DegreeProfile({d})) == general_slice_rank(n, d));
  CHECK_THROWS_AS(simultaneous_slice_rank(3, DegreeProfile()), std::domain_error);
  CHECK_THROWS_AS(simultaneous_slice_rank(3, DegreeProfile({2, 3})), std::domain_error);
}

TEST_CASE("root bounds bracket the root")
{
  CHECK(root_poly_floor(3, 4).floor_a == 0);
  for (int d = 3; d <= 10; ++d)
    for (std::int64_t n : {1, 2, 5, 17, 100, 999, 5000, 123456}) {
      const auto rb = root_poly_floor(n, d);
      CHECK(rb.floor_a == brute_floor_root(n, d));
      CHECK(rb.floor_a == n - general_slice_rank(n, d));
      CHECK(root_poly_eval(n, d, rb.upper) > 0);
      if (rb.lower) {
        CHECK(root_poly_eval(n, d, *rb.lower) < 0);
        CHECK(*rb.lower < rb.upper);
      }
    }
}

TEST_CASE("lower bound appears once n is large")
{
  for (int d = 4; d <= 10; ++d) {
    BigInt dfact = 1;
    for (int i = 2; i <= d; ++i) dfact *= i;
    BigInt start = 1;
    for (int i = 1; i < d; ++i) start *= d;
    start = (start + dfact - 1) / dfact;
    for (std::int64_t n = start.get_si(); n < start.get_si() + 3; ++n) {
      const bool any = lower_bound_condition_wide(n, d) || (d >= 5 && lower_bound_condition_narrow(n, d));
      CHECK(root_poly_floor(n, d).lower.has_value() == any);
    }
    CHECK(root_poly_floor(20000000, d).lower.has_value());
  }
}

TEST_CASE("w")
{
  CHECK(choose_w(4) == 6);
  CHECK(choose_w(5) == 7);
  CHECK(choose_w(6) == 4);
  CHECK(choose_w(9) == Rational(11, 2));
}

TEST_CASE("plateau points")
{
  const auto p4 = plateau_set(4, 10);
  CHECK(std::find(p4.begin(), p4.end(), 3) != p4.end());
  CHECK(std::find(p4.begin(), p4.end(), 6) != p4.end());
  for (int d = 3; d <= 10; ++d) {
    CHECK(plateau_set(d, 1).size() <= 1);
    std::vector<std::int64_t> brute;
    const auto& t = brute_table(d);
    for (std::size_t n = 1; n < 600; ++n)
      if (t[n] == t[n + 1]) brute.push_back(static_cast<std::int64_t>(n));
    CHECK(plateau_set(d, 599) == brute);
  }
}

}  // TEST_SUITE
