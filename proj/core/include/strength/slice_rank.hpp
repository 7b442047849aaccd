#pragma once

// Generic slice rank of degree-d forms in n+1 variables and the defect
// polynomial p(x) = (x+d)...(x+2) - d!(n-x) that governs it.

#include <cstdint>
#include <optional>
#include <vector>

#include "strength/numeric.hpp"
#include "strength/series.hpp"

namespace strength {

/// (r+1)(n-r) - C(d+r, d): expected dimension of the Fano scheme of r-planes.
BigInt fano_delta(std::int64_t n, int d, std::int64_t r);

/// Generic slice rank; closed form for d = 2, binomial minimisation for d >= 3.
std::int64_t general_slice_rank(std::int64_t n, int d);

/// min{ r : r(n+1-r) >= sum_i C(d_i+n-r, d_i) } for a family of forms, degrees >= 3.
std::int64_t simultaneous_slice_rank(std::int64_t n, const DegreeProfile& profile);

/// p(x) evaluated exactly at a rational point.
Rational root_poly_eval(std::int64_t n, int d, const Rational& x);

struct RootBound {
  std::int64_t floor_a = 0;        // n - general slice rank
  Rational upper;                  // p(upper) > 0
  std::optional<Rational> lower;   // p(lower) < 0, only under the largeness conditions
  Rational w;
};

/// Floor of the positive root a of p, with certified rational brackets.
RootBound root_poly_floor(std::int64_t n, int d);

/// d!n >= d^(d-1) and (d!n)^(d-3) >= ((d-1)!)^(d-1); requires d >= 4.
bool lower_bound_condition_wide(std::int64_t n, int d);
/// d!n >= d^(d-1) and (d!n)^(d-4) >= (d!/(d/2-1)^2)^(d-1); requires d >= 5.
bool lower_bound_condition_narrow(std::int64_t n, int d);
/// Same predicates with an arbitrary-precision n (thresholds can be large).
bool lower_bound_condition_wide(const BigInt& n, int d);
bool lower_bound_condition_narrow(const BigInt& n, int d);

/// w = d + 2 for d <= 5, else d/2 + 1 (kept exact for odd d).
Rational choose_w(int d);

/// All n in [1, N] with sl.rk(n, d) == sl.rk(n+1, d), ascending.
std::vector<std::int64_t> plateau_set(int d, std::int64_t N);

}  // namespace strength
