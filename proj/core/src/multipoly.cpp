#include "strength/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strength {

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c)
{
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index)
{
  MultiPoly p(std::move(variables));
  if (index >= p.vars_.size()) throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& e) const
{
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
  if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

static unsigned degree_of(const MultiPoly::Exponents& e)
{
  return std::accumulate(e.begin(), e.end(), 0u);
}

unsigned MultiPoly::total_degree() const
{
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, degree_of(e));
  return deg;
}

unsigned MultiPoly::degree_in(std::size_t var) const
{
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.at(var));
  return deg;
}

MultiPoly MultiPoly::top_homogeneous_part() const
{
  MultiPoly out(vars_);
  const unsigned deg = total_degree();
  for (const auto& [e, c] : terms_)
    if (degree_of(e) == deg) out.terms_.emplace(e, c);
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const
{
  if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= strength::pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

Rational MultiPoly::evaluate(std::span<const std::int64_t> point) const
{
  std::vector<Rational> q;
  q.reserve(point.size());
  for (auto v : point) q.emplace_back(to_big(v));
  return evaluate(std::span<const Rational>(q));
}

void MultiPoly::check_compatible(const MultiPoly& o) const
{
  if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
  a.check_compatible(b);
  MultiPoly out(a.vars_);
  MultiPoly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const
{
  MultiPoly out = constant(vars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const
{
  check_compatible(value);
  if (var >= vars_.size()) throw std::out_of_range("MultiPoly::substitute: index out of range");
  std::vector<MultiPoly> powers{constant(vars_, 1)};
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    MultiPoly mono(vars_);
    mono.add_term(rest, c);
    out += mono * powers[e[var]];
  }
  return out;
}

MultiPoly MultiPoly::rename_into(std::vector<std::string> variables) const
{
  std::vector<std::size_t> map(vars_.size(), variables.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it != variables.end()) map[i] = static_cast<std::size_t>(it - variables.begin());
  }
  MultiPoly out(std::move(variables));
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (map[i] == out.vars_.size())
        throw std::invalid_argument("MultiPoly::rename_into: variable " + vars_[i] + " still occurs");
      ne[map[i]] += e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

std::vector<Rational> MultiPoly::univariate_coefficients(std::size_t var) const
{
  std::vector<Rational> out(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i]) throw std::invalid_argument("MultiPoly: not univariate in " + vars_[var]);
    out[e[var]] = c;
  }
  return out;
}

std::string MultiPoly::to_string() const
{
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const unsigned da = degree_of(a.first), db = degree_of(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += strength::to_string(mag);
    } else {
      if (mag != 1) out += strength::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace strength
