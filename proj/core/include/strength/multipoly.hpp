#pragma once

// Sparse multivariate polynomials with rational coefficients.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "strength/numeric.hpp"

namespace strength {

class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  /// Zero polynomial in the given variables.
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_variables() const noexcept { return vars_.size(); }
  /// Never contains a zero coefficient.
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Sum of the terms of maximal total degree.
  MultiPoly top_homogeneous_part() const;

  Rational evaluate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const std::int64_t> point) const;

  /// Replaces variable `var` by `value` (which must live in the same variables).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// Moves the polynomial into a new variable list; every variable with a
  /// nonzero exponent must appear there by name.
  MultiPoly rename_into(std::vector<std::string> variables) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// Canonical text: terms by descending total degree, then descending
  /// exponent vector; e.g. "1/6*m^3 - 2*m*l2 + 17/6*m + 2*l2 - 3".
  std::string to_string() const;

  /// Coefficients c_0..c_k of a polynomial in (at most) the single variable
  /// `var`; throws if any other variable occurs.
  std::vector<Rational> univariate_coefficients(std::size_t var = 0) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace strength
