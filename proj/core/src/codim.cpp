#include "strength/codim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "strength/slice_rank.hpp"

namespace strength {
namespace {

void check_args(int d, std::int64_t m, std::span<const std::int64_t> tail)
{
  if (d < 4) throw std::domain_error("f_{n,d} needs d >= 4, got " + std::to_string(d));
  if (m < 0) throw std::domain_error("f_{n,d} needs m >= 0");
  if (tail.size() != tail_length(d))
    throw std::invalid_argument("l-tail must have length " + std::to_string(tail_length(d)) + " for d = " +
                                std::to_string(d));
  for (auto l : tail)
    if (l < 0) throw std::domain_error("l entries must be >= 0");
}

// Walks i = 2..floor(d/2), choosing (beta_1i, beta_2i) with the running
// weight kept <= d; every leaf contributes sign * prod * C(m + d - weight, m).
void beta_sum(int d, std::int64_t m, std::span<const std::int64_t> tail, std::size_t idx, int weight,
              int parity, const BigInt& prod, BigInt& acc)
{
  if (idx == tail.size()) {
    BigInt term = prod * binom(m + d - weight, m);
    if (parity) acc -= term; else acc += term;
    return;
  }
  const int i = static_cast<int>(idx) + 2;
  const std::int64_t l = tail[idx];
  for (std::int64_t b1 = 0; b1 <= l && weight + b1 * i <= d; ++b1) {
    const BigInt c1 = binom(l, b1);
    for (std::int64_t b2 = 0; b2 <= l && weight + b1 * i + b2 * (d - i) <= d; ++b2) {
      beta_sum(d, m, tail, idx + 1, weight + static_cast<int>(b1 * i + b2 * (d - i)),
               parity ^ static_cast<int>((b1 + b2) & 1), prod * c1 * binom(l, b2), acc);
    }
  }
}

BigInt linear_part(std::int64_t n, std::int64_t m)
{
  return to_big(n - m) * to_big(m + 1);
}

}  // namespace

EllProfile EllProfile::make(int d, std::vector<std::int64_t> ells)
{
  if (d < 4) throw std::domain_error("EllProfile needs d >= 4");
  if (ells.size() != static_cast<std::size_t>(d / 2))
    throw std::invalid_argument("EllProfile for d = " + std::to_string(d) + " needs " + std::to_string(d / 2) +
                                " entries");
  for (auto l : ells)
    if (l < 0) throw std::domain_error("EllProfile entries must be >= 0");
  return EllProfile{d, std::move(ells)};
}

std::int64_t EllProfile::r() const { return std::accumulate(ells.begin(), ells.end(), std::int64_t{0}); }

BigInt f_eval(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail)
{
  check_args(d, m, tail);
  BigInt acc = 0;
  beta_sum(d, m, tail, 0, 0, 0, BigInt(1), acc);
  return acc - linear_part(n, m);
}

BigInt f_eval_series(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail)
{
  check_args(d, m, tail);
  const auto order = static_cast<std::size_t>(d);
  TruncSeries s = inverse_power_of_one_minus_t(m, order);
  for (std::size_t idx = 0; idx < tail.size(); ++idx) {
    const int i = static_cast<int>(idx) + 2;
    if (tail[idx] == 0) continue;
    s = s * one_minus_t_power(i, tail[idx], order);
    s = s * one_minus_t_power(d - i, tail[idx], order);
  }
  return s.coeff(order) - linear_part(n, m);
}

LinearCodim codim_sigma_linear(std::int64_t n, int d, std::int64_t r)
{
  if (r < 1) throw std::domain_error("codim_sigma_linear: r must be >= 1");
  if (r > n) throw std::domain_error("codim_sigma_linear: r must be <= n");
  const std::vector<std::int64_t> zeros(tail_length(d), 0);
  LinearCodim out;
  out.raw = f_eval(n, d, n - r, zeros);
  out.value = out.raw < 0 ? BigInt(0) : out.raw;
  return out;
}

DegreeProfile generator_profile(const EllProfile& profile)
{
  const int d = profile.d;
  if (d < 4) throw std::domain_error("generator_profile needs d >= 4");
  std::vector<int> degrees;
  for (int i = 1; i <= d / 2; ++i) {
    const auto l = static_cast<std::size_t>(profile.ells[static_cast<std::size_t>(i - 1)]);
    degrees.insert(degrees.end(), l, i);
    degrees.insert(degrees.end(), l, d - i);
  }
  return DegreeProfile(std::move(degrees));
}

bool is_exceptional_case(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail)
{
  const bool nonzero = std::any_of(tail.begin(), tail.end(), [](std::int64_t l) { return l != 0; });
  return nonzero && n == 3 && d == 4 && !tail.empty() && m - tail[0] == 1;
}

KeyInequality key_inequality(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail)
{
  check_args(d, m, tail);
  if (m > n) throw std::out_of_range("key_inequality: m = " + std::to_string(m) + " exceeds n = " + std::to_string(n));
  const std::int64_t sum = std::accumulate(tail.begin(), tail.end(), std::int64_t{0});
  const std::int64_t floor_bound = n - general_slice_rank(n, d) + 1;
  if (m - sum < floor_bound)
    throw std::out_of_range("key_inequality: m - sum(l) = " + std::to_string(m - sum) + " is below n - sl.rk + 1 = " +
                            std::to_string(floor_bound));
  KeyInequality out;
  out.lhs = f_eval(n, d, m, tail);
  const std::vector<std::int64_t> zeros(tail.size(), 0);
  out.rhs = f_eval(n, d, m - sum, zeros);
  out.holds = out.lhs >= out.rhs;
  out.strict = out.lhs > out.rhs;
  out.exceptional = is_exceptional_case(n, d, m, tail);
  return out;
}

std::string_view to_string(Coverage c)
{
  switch (c) {
    case Coverage::red: return "red";
    case Coverage::green: return "green";
    case Coverage::blue: return "blue";
    case Coverage::open: return "open";
  }
  return "open";
}

Coverage coverage_cell(std::int64_t n, int d)
{
  if (n < 2) throw std::domain_error("coverage_cell: n must be >= 2");
  if (d < 2) throw std::domain_error("coverage_cell: d must be >= 2");
  // Plane curves always fall in the complete-intersection range; otherwise
  // d >= (3n-1)/2 is the boundary the printed grid actually follows.
  if (n == 2 || 2 * static_cast<std::int64_t>(d) >= 3 * n - 1) return Coverage::red;
  if (2 * general_slice_rank(n, d) <= n + 2) return Coverage::green;
  switch (d) {
    case 2: case 3: case 4: case 5: case 6: case 7: case 9: return Coverage::blue;
    default: return Coverage::open;
  }
}

}  // namespace strength
