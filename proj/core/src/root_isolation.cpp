#include "strength/root_isolation.hpp"

#include <stdexcept>

namespace strength {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::leading() const
{
  if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const
{
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const
{
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const
{
  std::vector<Rational> n(c_);
  for (auto& v : n) v = -v;
  return UniPoly(std::move(n));
}

UniPoly operator%(const UniPoly& a, const UniPoly& b)
{
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  const Rational& lb = b.leading();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(db);
    const Rational q = r.back() / lb;
    for (int i = 0; i <= db; ++i) r[shift + static_cast<std::size_t>(i)] -= q * b.c_[static_cast<std::size_t>(i)];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

Rational cauchy_bound(const UniPoly& p)
{
  const Rational& lead = p.leading();
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational v = abs(p.coeffs()[static_cast<std::size_t>(i)] / lead);
    if (v > m) m = v;
  }
  return m + 1;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    seq.push_back(-(seq[seq.size() - 2] % seq.back()));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

static int sign_changes(const std::vector<UniPoly>& sturm, const Rational& x)
{
  int changes = 0, prev = 0;
  for (const auto& q : sturm) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int count_roots(const std::vector<UniPoly>& sturm, const Rational& a, const Rational& b)
{
  return sign_changes(sturm, a) - sign_changes(sturm, b);
}

RootInterval bisect_once(const UniPoly& p, const std::vector<UniPoly>& sturm, const RootInterval& iv)
{
  Rational mid = (iv.lo + iv.hi) / 2;
  // Keep endpoints off the roots so the Sturm counts stay valid.
  for (unsigned k = 3; p.sign_at(mid) == 0; ++k) mid = iv.lo + (iv.hi - iv.lo) * to_rational(k - 1, 2 * k);
  if (count_roots(sturm, mid, iv.hi) > 0) return {mid, iv.hi};
  return {iv.lo, mid};
}

std::optional<RootInterval> highest_root(const UniPoly& poly, const Rational& width)
{
  if (poly.is_zero()) throw std::domain_error("highest_root: zero polynomial");
  if (width <= 0) throw std::domain_error("highest_root: width must be positive");
  const UniPoly p = poly.leading() < 0 ? -poly : poly;
  if (p.degree() == 0) return std::nullopt;
  const auto sturm = sturm_sequence(p);
  const Rational bound = cauchy_bound(p);
  RootInterval iv{-bound, bound};
  if (count_roots(sturm, iv.lo, iv.hi) == 0) return std::nullopt;
  while (iv.width() > width) iv = bisect_once(p, sturm, iv);
  return iv;
}

RootInterval refine(const UniPoly& poly, RootInterval iv, const Rational& width)
{
  const UniPoly p = poly.leading() < 0 ? -poly : poly;
  const auto sturm = sturm_sequence(p);
  while (iv.width() > width) iv = bisect_once(p, sturm, iv);
  return iv;
}

}  // namespace strength
