#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "strength/series.hpp"

using namespace strength;

namespace {

// Pascal's triangle, row by row.
std::vector<std::vector<BigInt>> pascal(int rows)
{
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(rows));
  for (int a = 0; a < rows; ++a) {
    auto& row = t[static_cast<std::size_t>(a)];
    row.assign(static_cast<std::size_t>(a) + 1, 1);
    for (int b = 1; b < a; ++b)
      row[static_cast<std::size_t>(b)] = t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                                         t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
  }
  return t;
}

// coeff_k prod(1 - t^{d_i}) / (1 - t)^{n+1} by inclusion-exclusion over
// subsets of the generators.
BigInt subset_sum_coeff(std::int64_t n, const std::vector<int>& degrees, std::int64_t k)
{
  BigInt acc = 0;
  const std::size_t s = degrees.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    std::int64_t shift = 0;
    int bits = 0;
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) {
        shift += degrees[i];
        ++bits;
      }
    if (shift > k) continue;
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + k - shift), static_cast<unsigned long>(n));
    if (bits & 1) acc -= c; else acc += c;
  }
  return acc;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("binomials agree with Pascal's triangle")
{
  const auto t = pascal(60);
  for (int a = 0; a < 60; ++a)
    for (int b = 0; b <= a; ++b) CHECK(binom(a, b) == t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
}

TEST_CASE("binomial domain")
{
  CHECK(binom(3, 5) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(0, 1) == 0);
  CHECK_THROWS_AS(binom(-1, 0), std::domain_error);
  CHECK_THROWS_AS(binom(4, -1), std::domain_error);
}

TEST_CASE("truncated arithmetic")
{
  TruncSeries a{1, 2, 3};
  TruncSeries b{1, -1, 0, 5};
  CHECK(a + a == TruncSeries{2, 4, 6});
  CHECK_THROWS(a + b);
  CHECK(a * b == TruncSeries{1, 1, 1});
  CHECK(a - a == TruncSeries(2));
  CHECK_THROWS_AS(a.coeff(3), std::out_of_range);
  CHECK(b.truncated(1) == TruncSeries{1, -1});
}

TEST_CASE("inverse powers of 1 - t")
{
  const auto s = inverse_power_of_one_minus_t(4, 20);
  for (std::size_t k = 0; k <= 20; ++k) CHECK(s.coeff(k) == binom(4 + static_cast<std::int64_t>(k), 4));
  // (1 - t)^{n+1} times its inverse is 1.
  const auto prod = s * one_minus_t_power(1, 5, 20);
  CHECK(prod.coeff(0) == 1);
  for (std::size_t k = 1; k <= 20; ++k) CHECK(prod.coeff(k) == 0);
}

TEST_CASE("degree profiles")
{
  DegreeProfile p({4, 2, 2, 3});
  CHECK(p.min_degree() == 2);
  CHECK(p.max_degree() == 4);
  CHECK(p.multiplicities() == std::vector<std::int64_t>{0, 2, 1, 1});
  const std::vector<std::int64_t> mult{0, 2, 1, 1};
  CHECK(DegreeProfile::from_multiplicities(mult) == p);
  CHECK_THROWS_AS(DegreeProfile({2, 0}), std::invalid_argument);
}

TEST_CASE("Froberg series against inclusion-exclusion")
{
  const std::vector<std::vector<int>> profiles{{}, {2}, {2, 2}, {2, 3, 4}, {3, 3, 3, 3}, {1, 2, 5}, {2, 2, 2, 2, 2, 2}};
  for (std::int64_t n = 0; n <= 5; ++n)
    for (const auto& degs : profiles) {
      const auto s = froberg_series(n, DegreeProfile(degs), 14);
      for (std::int64_t k = 0; k <= 14; ++k) CHECK(s.coeff(static_cast<std::size_t>(k)) == subset_sum_coeff(n, degs, k));
    }
}

TEST_CASE("bracket zeroes from the first negative coefficient")
{
  const TruncSeries s{1, 3, 2, -1, 4, -2};
  CHECK(bracket(s) == TruncSeries{1, 3, 2, 0, 0, 0});
  const TruncSeries pos{1, 0, 2};
  CHECK(bracket(pos) == pos);
}

TEST_CASE("bracketed coefficients")
{
  // Complete intersection of two quadrics in three variables.
  CHECK(froberg_coeff(2, DegreeProfile({2, 2}), 2) == 4);
  // Binary forms: one degree-d generator leaves d independent forms in each degree >= d - 1.
  for (int d = 1; d <= 9; ++d) CHECK(froberg_coeff(1, DegreeProfile({d}), static_cast<std::size_t>(d)) == d);
  // Four cubics in three variables, against the raw series cut at its first negative term.
  const DegreeProfile four_cubics({3, 3, 3, 3});
  const auto raw = froberg_series(2, four_cubics, 8);
  for (std::size_t k = 0; k <= 8; ++k) {
    bool negative_before = false;
    for (std::size_t j = 0; j <= k; ++j) negative_before = negative_before || raw.coeff(j) < 0;
    CHECK(froberg_coeff(2, four_cubics, k) == (negative_before ? BigInt(0) : raw.coeff(k)));
  }
}

}  // TEST_SUITE
