#pragma once

// Certified isolation of the largest real root of a univariate rational
// polynomial: Sturm counts plus bisection inside the Cauchy bound.

#include <optional>
#include <vector>

#include "strength/numeric.hpp"

namespace strength {

/// Coefficients low to high; trailing zeros are trimmed on construction.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign((*this)(x)); }

  UniPoly derivative() const;
  UniPoly operator-() const;

  /// Remainder of polynomial division; divisor must be nonzero.
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  std::vector<Rational> c_;
};

/// 1 + max |a_i / a_k|: every real root lies strictly inside (-B, B).
Rational cauchy_bound(const UniPoly& p);

/// p, p', -rem(p_{i-1}, p_i), ... down to a constant.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Distinct real roots in (a, b]; a < b, and neither endpoint may be a root.
int count_roots(const std::vector<UniPoly>& sturm, const Rational& a, const Rational& b);

struct RootInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

/// Largest real root x* lies in (lo, hi), p(hi) > 0 and p has no root in
/// [hi, inf). Returns nullopt when p has no real root. A negative leading
/// coefficient is normalised away; the zero polynomial is a domain error.
std::optional<RootInterval> highest_root(const UniPoly& p, const Rational& width);

/// Shrinks an interval produced by highest_root until its width is <= `width`.
RootInterval refine(const UniPoly& p, RootInterval iv, const Rational& width);

/// Bisection step that keeps the largest root of p inside the interval.
RootInterval bisect_once(const UniPoly& p, const std::vector<UniPoly>& sturm, const RootInterval& iv);

}  // namespace strength
