#pragma once

// The codimension function f_{n,d} of joins of secant varieties of
// reducible-form components, and what is built on top of it.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "strength/numeric.hpp"
#include "strength/series.hpp"

namespace strength {

/// (l_1, ..., l_{floor(d/2)}): how many summands have a factor of each degree.
struct EllProfile {
  int d = 0;
  std::vector<std::int64_t> ells;

  /// Validates length floor(d/2) and nonnegativity; d >= 4.
  static EllProfile make(int d, std::vector<std::int64_t> ells);
  std::int64_t r() const;
  std::span<const std::int64_t> tail() const { return std::span(ells).subspan(1); }
};

/// Length of the l-tail (l_2, ..., l_{floor(d/2)}).
inline std::size_t tail_length(int d) { return static_cast<std::size_t>(d / 2 - 1); }

/// f_{n,d}(m, l_2, ...) via the alternating beta-sum of binomials.
BigInt f_eval(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail);

/// Same value through coeff_d of prod (1-t^i)^{l_i}(1-t^{d-i})^{l_i} / (1-t)^{m+1}.
BigInt f_eval_series(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail);

struct LinearCodim {
  BigInt value;  // max(raw, 0)
  BigInt raw;    // f_{n,d}(n - r, 0, ..., 0)
};

/// Codimension of the r-th secant of forms with a linear factor; 1 <= r <= n.
LinearCodim codim_sigma_linear(std::int64_t n, int d, std::int64_t r);

/// Generator degrees of the tangent ideal at a general point of the join.
DegreeProfile generator_profile(const EllProfile& profile);

struct KeyInequality {
  BigInt lhs;   // f(m, l_2, ...)
  BigInt rhs;   // f(m - sum l, 0, ...)
  bool holds = false;
  bool strict = false;
  bool exceptional = false;
};

/// Requires m <= n and m - sum(tail) >= n - sl.rk(n, d) + 1; throws
/// std::out_of_range naming the violated bound otherwise.
KeyInequality key_inequality(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail);

/// The one configuration where the inequality is allowed to be an equality.
bool is_exceptional_case(std::int64_t n, int d, std::int64_t m, std::span<const std::int64_t> tail);

enum class Coverage { red, green, blue, open };

std::string_view to_string(Coverage c);

/// Which known result settles generic strength = generic slice rank at (n, d).
Coverage coverage_cell(std::int64_t n, int d);

}  // namespace strength
