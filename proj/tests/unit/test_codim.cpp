#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "strength/codim.hpp"
#include "strength/slice_rank.hpp"

using namespace strength;

namespace {

using Poly = std::vector<BigInt>;

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t order)
{
  Poly c(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// (1 - t^step)^e expanded by repeated multiplication.
Poly one_minus_power(std::size_t step, std::int64_t e, std::size_t order)
{
  Poly base(order + 1, 0), out(order + 1, 0);
  base[0] = 1;
  if (step <= order) base[step] = -1;
  out[0] = 1;
  for (std::int64_t k = 0; k < e; ++k) out = mul_trunc(out, base, order);
  return out;
}

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

// f_{n,d} straight from its generating function, with no shared code.
BigInt f_reference(std::int64_t n, int d, std::int64_t m, const std::vector<std::int64_t>& tail)
{
  const auto order = static_cast<std::size_t>(d);
  Poly p(order + 1, 0);
  p[0] = 1;
  for (std::size_t idx = 0; idx < tail.size(); ++idx) {
    const std::size_t i = idx + 2;
    p = mul_trunc(p, one_minus_power(i, tail[idx], order), order);
    p = mul_trunc(p, one_minus_power(order - i, tail[idx], order), order);
  }
  BigInt acc = 0;
  for (std::size_t j = 0; j <= order; ++j) acc += p[j] * choose(m + static_cast<std::int64_t>(order - j), m);
  return acc - BigInt(n - m) * BigInt(m + 1);
}

}  // namespace

TEST_SUITE("codim") {

TEST_CASE("equal codimensions at n = 3, d = 4")
{
  const std::vector<std::int64_t> t0{0}, t1{1}, t2{2};
  CHECK(f_eval(3, 4, 1, t0) == 1);
  CHECK(f_eval(3, 4, 2, t1) == 1);
  CHECK(f_eval(3, 4, 3, t2) == 1);
  CHECK(f_eval_series(3, 4, 2, t1) == 1);
}

TEST_CASE("both evaluation paths agree with an independent expansion")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 4 + static_cast<int>(rng() % 7);
    const auto m = static_cast<std::int64_t>(rng() % 31);
    const auto n = static_cast<std::int64_t>(rng() % 31);
    std::vector<std::int64_t> tail(tail_length(d));
    for (auto& l : tail) l = static_cast<std::int64_t>(rng() % 6);
    const BigInt ref = f_reference(n, d, m, tail);
    CHECK(f_eval(n, d, m, tail) == ref);
    CHECK(f_eval_series(n, d, m, tail) == ref);
  }
}

TEST_CASE("zero tail closed form")
{
  for (int d = 4; d <= 10; ++d)
    for (std::int64_t m = 0; m <= 20; ++m) {
      const std::vector<std::int64_t> zeros(tail_length(d), 0);
      CHECK(f_eval(25, d, m, zeros) == choose(m + d, d) - BigInt(25 - m) * BigInt(m + 1));
    }
}

TEST_CASE("argument validation")
{
  const std::vector<std::int64_t> bad{1, 2};
  CHECK_THROWS_AS(f_eval(3, 4, 1, bad), std::invalid_argument);
  const std::vector<std::int64_t> neg{-1};
  CHECK_THROWS_AS(f_eval(3, 4, 1, neg), std::domain_error);
  const std::vector<std::int64_t> empty;
  CHECK_THROWS_AS(f_eval(3, 3, 1, empty), std::domain_error);
  CHECK_THROWS_AS(EllProfile::make(4, {1}), std::invalid_argument);
}

TEST_CASE("secants of forms with a linear factor fill exactly at the slice rank")
{
  for (int d = 4; d <= 10; ++d)
    for (std::int64_t n = 2; n <= 50; ++n) {
      const auto s = general_slice_rank(n, d);
      for (std::int64_t r = 1; r < s; ++r) CHECK(codim_sigma_linear(n, d, r).value > 0);
      if (s <= n) {
        const auto at = codim_sigma_linear(n, d, s);
        CHECK(at.raw <= 0);
        CHECK(at.value == 0);
      }
    }
  CHECK_THROWS_AS(codim_sigma_linear(5, 4, 0), std::domain_error);
  CHECK_THROWS_AS(codim_sigma_linear(5, 4, 6), std::domain_error);
}

TEST_CASE("tangent ideal generators")
{
  const auto e = EllProfile::make(6, {2, 1, 3});
  CHECK(e.r() == 6);
  const auto g = generator_profile(e);
  CHECK(g.size() == 12);
  CHECK(g == DegreeProfile({1, 1, 2, 3, 3, 3, 3, 3, 3, 4, 5, 5}));
}

TEST_CASE("key inequality")
{
  const std::vector<std::int64_t> t1{1}, t2{2}, t0{0};
  auto a = key_inequality(3, 4, 2, t1);
  CHECK(a.lhs == 1);
  CHECK(a.rhs == 1);
  CHECK(a.holds);
  CHECK_FALSE(a.strict);
  CHECK(a.exceptional);
  auto b = key_inequality(3, 4, 3, t2);
  CHECK(b.holds);
  CHECK(b.exceptional);
  for (std::int64_t m = 1; m <= 3; ++m) {
    auto z = key_inequality(3, 4, m, t0);
    CHECK(z.lhs == z.rhs);
    CHECK_FALSE(z.strict);
    CHECK_FALSE(z.exceptional);
  }
  CHECK_THROWS_AS(key_inequality(3, 4, 4, t0), std::out_of_range);
  CHECK_THROWS_AS(key_inequality(3, 4, 0, t0), std::out_of_range);
}

TEST_CASE("coverage table")
{
  // Rows n = 2..8, columns d = 2..12; r red, g green, b blue, . blank.
  const std::vector<std::string> table{
      "rrrrrrrrrrr",
      "ggrrrrrrrrr",
      "ggggrrrrrrr",
      "gbbbbrrrrrr",
      "ggbbbb.rrrr",
      "gbbbbb.brrr",
      "ggbbbb.b..r",
  };
  for (std::int64_t n = 2; n <= 8; ++n)
    for (int d = 2; d <= 12; ++d) {
      const char want = table[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(d - 2)];
      const auto got = to_string(coverage_cell(n, d));
      CAPTURE(n);
      CAPTURE(d);
      CHECK(got[0] == (want == '.' ? 'o' : want));
    }
  CHECK(coverage_cell(2, 3) == Coverage::red);
  CHECK(coverage_cell(4, 5) == Coverage::green);
  CHECK(coverage_cell(8, 10) == Coverage::open);
}

}  // TEST_SUITE
