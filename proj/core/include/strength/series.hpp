#pragma once

// Truncated power series with exact integer coefficients, and the
// generic-ideal Hilbert series prediction built from them.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "strength/numeric.hpp"

namespace strength {

/// Power series a_0 + a_1 t + ... + a_D t^D, truncated at the inclusive order D.
///
/// Sums and products never extend the order: a product is truncated at the
/// smaller of the two operand orders.
class TruncSeries {
 public:
  /// Zero series of the given order.
  explicit TruncSeries(std::size_t order);
  /// Takes ownership of `coeffs`; the order is `coeffs.size() - 1`.
  explicit TruncSeries(std::vector<BigInt> coeffs);
  TruncSeries(std::initializer_list<long> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of t^i; zero beyond the order is *not* implied, so
  /// reading past the order throws std::out_of_range.
  const BigInt& coeff(std::size_t i) const;
  BigInt& coeff(std::size_t i);

  TruncSeries truncated(std::size_t order) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Multiset of generator degrees d_1 <= ... <= d_s, all >= 1.
class DegreeProfile {
 public:
  DegreeProfile() = default;
  /// Throws std::invalid_argument on a degree < 1.
  explicit DegreeProfile(std::vector<int> degrees);
  /// `multiplicities[i]` generators of degree i + 1.
  static DegreeProfile from_multiplicities(std::span<const std::int64_t> multiplicities);

  std::span<const int> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }
  int min_degree() const;
  int max_degree() const;
  /// m_i = #{j : d_j = i} for i = 1..max_degree (index 0 holds m_1).
  std::vector<std::int64_t> multiplicities() const;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;

 private:
  std::vector<int> degrees_;
};

/// C(a, b) with C(a, b) = 0 for 0 <= a < b. Throws std::domain_error for a < 0
/// or b < 0.
BigInt binom(std::int64_t a, std::int64_t b);

/// 1 / (1 - t)^(n + 1), i.e. coefficients C(n + k, n).
TruncSeries inverse_power_of_one_minus_t(std::int64_t n, std::size_t order);

/// (1 - t^step)^exponent.
TruncSeries one_minus_t_power(int step, std::int64_t exponent, std::size_t order);

/// prod_i (1 - t^{d_i}) / (1 - t)^{n + 1}, truncated at `order`.
TruncSeries froberg_series(std::int64_t n, const DegreeProfile& profile, std::size_t order);

/// Keeps coefficients up to (excluding) the first negative one, zeroes the rest.
TruncSeries bracket(const TruncSeries& s);

/// coeff_d of the bracketed prediction.
BigInt froberg_coeff(std::int64_t n, const DegreeProfile& profile, std::size_t d);

}  // namespace strength
