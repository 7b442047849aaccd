#pragma once

// Symbolic bounding polynomials for the asymptotic regime and the degree
// thresholds N derived from their largest real roots.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strength/multipoly.hpp"
#include "strength/numeric.hpp"
#include "strength/root_isolation.hpp"

namespace strength {

/// C(m + e, m) as a polynomial in the single variable m.
MultiPoly binom_poly(unsigned e);

/// f_{n,d}(m, l_2, ..., l_j, 0, ...) in variables (m, l2, ..., lj, n).
MultiPoly f_symbolic(int d, int j);

/// f(.., l_{j-1}, l_j, 0..) - f(.., l_{j-1}+1, l_j-1, 0..) - 1 in (m, l2, ..., lj).
/// Throws std::logic_error if n survives or the top part is not m^{d-j+1}/(d-j+1)!.
MultiPoly build_g_A(int d, int j);

/// g(m, l) with f(m, l, 0..) - f(m-1, l-1, 0..) - 1 = g(m, l) - n.
MultiPoly build_g_B(int d);

/// Drops positive coefficients of terms involving any l, then sets every l to m.
MultiPoly tilde_transform(const MultiPoly& p);

/// tilde(g_B)(m) - (m + w - 1)^{d-1} / d!.
MultiPoly b_threshold_poly(int d, const Rational& w);

UniPoly to_unipoly(const MultiPoly& p);

struct StatementRoot {
  std::string statement;               // "A3", "A4", ..., or "B"
  MultiPoly poly;                      // univariate in m
  std::optional<RootInterval> root;    // absent when there is no real root
};

struct DegreeConfig {
  int d = 0;
  Rational w;
  std::vector<StatementRoot> roots;
  BigInt M;                            // floor of the largest certified upper endpoint
  BigInt largeness_bound;              // least n meeting the lower-bound condition in use
  std::optional<BigInt> N_paper;
  BigInt N_computed;
};

/// Default isolation width 1/1000.
Rational default_root_width();

DegreeConfig compute_N(int d, const Rational& width = default_root_width());

/// N >= largeness bound and d!N >= (x + w - 1)^{d-1} for every statement root x,
/// decided exactly by refining the root intervals.
bool threshold_valid(const DegreeConfig& config, const BigInt& N);

/// Least n satisfying the lower-bound condition paired with w (wide for d <= 5).
BigInt largeness_threshold(int d);

/// Thresholds used for 4 <= d <= 10 in the original proof.
std::optional<BigInt> paper_threshold(int d);

}  // namespace strength
