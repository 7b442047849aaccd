#include "strength/thresholds.hpp"

#include <algorithm>
#include <stdexcept>

#include "strength/slice_rank.hpp"

namespace strength {
namespace {

std::vector<std::string> ell_names(int j)
{
  std::vector<std::string> v{"m"};
  for (int i = 2; i <= j; ++i) v.push_back("l" + std::to_string(i));
  return v;
}

// C(x, b) = x(x-1)...(x-b+1)/b! in variable `var`.
MultiPoly falling_binom(const std::vector<std::string>& vars, std::size_t var, unsigned b)
{
  MultiPoly out = MultiPoly::constant(vars, 1);
  const MultiPoly x = MultiPoly::variable(vars, var);
  for (unsigned k = 0; k < b; ++k) out = out * (x - MultiPoly::constant(vars, Rational(k)));
  return out * (Rational(1) / Rational(factorial(b)));
}

struct BetaWalk {
  int d;
  const std::vector<std::string>& vars;
  const std::vector<MultiPoly>& binom_m;   // C(m + e, m) for e = 0..d, in `vars`
  MultiPoly acc;

  void run(int i, int j, int weight, int parity, const MultiPoly& prod)
  {
    if (i > j) {
      MultiPoly term = prod * binom_m[static_cast<std::size_t>(d - weight)];
      if (parity) acc -= term; else acc += term;
      return;
    }
    const auto var = static_cast<std::size_t>(i - 1);
    for (int b1 = 0; weight + b1 * i <= d; ++b1) {
      const MultiPoly c1 = falling_binom(vars, var, static_cast<unsigned>(b1));
      for (int b2 = 0; weight + b1 * i + b2 * (d - i) <= d; ++b2) {
        run(i + 1, j, weight + b1 * i + b2 * (d - i), parity ^ ((b1 + b2) & 1),
            prod * c1 * falling_binom(vars, var, static_cast<unsigned>(b2)));
      }
    }
  }
};

void require_d(int d)
{
  if (d < 4) throw std::domain_error("symbolic construction needs d >= 4, got " + std::to_string(d));
}

// (x + w - 1)^{d-1} / d!, increasing for x + w - 1 >= 0.
Rational threshold_value(const Rational& x, const Rational& w, int d)
{
  return pow(x + w - 1, static_cast<unsigned>(d - 1)) / Rational(factorial(static_cast<unsigned>(d)));
}

// ceil((x* + w - 1)^{d-1}/d!) for the root bracketed by `iv`; 0 when the root
// sits below 1 - w, where it constrains nothing.
BigInt root_ceiling(const UniPoly& poly, RootInterval iv, const Rational& w, int d)
{
  const UniPoly p = poly.leading() < 0 ? -poly : poly;
  const auto sturm = sturm_sequence(p);
  for (int iter = 0; iter < 2000; ++iter) {
    if (iv.hi + w - 1 <= 0) return 0;
    if (iv.lo + w - 1 >= 0) {
      const BigInt c = ceil(threshold_value(iv.hi, w, d));
      if (threshold_value(iv.lo, w, d) > Rational(c - 1)) return c;
    }
    iv = bisect_once(p, sturm, iv);
  }
  throw std::runtime_error("root_ceiling: refinement did not converge");
}

}  // namespace

MultiPoly binom_poly(unsigned e)
{
  const std::vector<std::string> vars{"m"};
  MultiPoly out = MultiPoly::constant(vars, 1);
  const MultiPoly m = MultiPoly::variable(vars, 0);
  for (unsigned k = 1; k <= e; ++k) out = out * (m + MultiPoly::constant(vars, Rational(k)));
  return out * (Rational(1) / Rational(factorial(e)));
}

MultiPoly f_symbolic(int d, int j)
{
  require_d(d);
  if (j < 2 || j > d / 2) throw std::domain_error("f_symbolic: need 2 <= j <= floor(d/2)");
  auto vars = ell_names(j);
  vars.push_back("n");
  std::vector<MultiPoly> binom_m;
  for (int e = 0; e <= d; ++e) binom_m.push_back(binom_poly(static_cast<unsigned>(e)).rename_into(vars));
  BetaWalk walk{d, vars, binom_m, MultiPoly(vars)};
  walk.run(2, j, 0, 0, MultiPoly::constant(vars, 1));
  // - (n - m)(m + 1)
  const MultiPoly m = MultiPoly::variable(vars, 0);
  const MultiPoly n = MultiPoly::variable(vars, vars.size() - 1);
  const MultiPoly one = MultiPoly::constant(vars, 1);
  return walk.acc - (n - m) * (m + one);
}

MultiPoly build_g_A(int d, int j)
{
  require_d(d);
  if (j < 3 || j > d / 2) throw std::domain_error("build_g_A: need 3 <= j <= floor(d/2)");
  const MultiPoly f = f_symbolic(d, j);
  const auto& vars = f.variables();
  const auto prev = static_cast<std::size_t>(j - 2), last = static_cast<std::size_t>(j - 1);
  const MultiPoly one = MultiPoly::constant(vars, 1);
  const MultiPoly shifted = f.substitute(prev, MultiPoly::variable(vars, prev) + one)
                                .substitute(last, MultiPoly::variable(vars, last) - one);
  const MultiPoly diff = f - shifted - one;
  if (diff.degree_in(vars.size() - 1) != 0)
    throw std::logic_error("build_g_A: n does not cancel for d=" + std::to_string(d) + ", j=" + std::to_string(j));
  MultiPoly g = diff.rename_into(ell_names(j));

  const unsigned top = static_cast<unsigned>(d - j + 1);
  MultiPoly expected(g.variables());
  MultiPoly::Exponents e(g.num_variables(), 0);
  e[0] = top;
  expected.add_term(e, Rational(1) / Rational(factorial(top)));
  if (g.top_homogeneous_part() != expected)
    throw std::logic_error("build_g_A: top homogeneous part is not m^" + std::to_string(top) + "/" +
                           std::to_string(top) + "!");
  return g;
}

MultiPoly build_g_B(int d)
{
  require_d(d);
  const MultiPoly f = f_symbolic(d, 2);
  const auto& vars = f.variables();  // (m, l2, n)
  const MultiPoly one = MultiPoly::constant(vars, 1);
  const MultiPoly shifted = f.substitute(0, MultiPoly::variable(vars, 0) - one)
                                .substitute(1, MultiPoly::variable(vars, 1) - one);
  const MultiPoly n = MultiPoly::variable(vars, 2);
  const MultiPoly g = f - shifted - one + n;
  if (g.degree_in(2) != 0)
    throw std::logic_error("build_g_B: n-coefficient of the difference is not -1 for d=" + std::to_string(d));
  MultiPoly out = g.rename_into(ell_names(2));
  MultiPoly::Exponents e{static_cast<unsigned>(d - 1), 0};
  if (out.total_degree() != static_cast<unsigned>(d - 1) ||
      out.coefficient(e) != Rational(1) / Rational(factorial(static_cast<unsigned>(d - 1))))
    throw std::logic_error("build_g_B: leading coefficient is not 1/(d-1)!");
  return out;
}

MultiPoly tilde_transform(const MultiPoly& p)
{
  MultiPoly out(std::vector<std::string>{p.variables().empty() ? std::string("m") : p.variables()[0]});
  for (const auto& [e, c] : p.terms()) {
    unsigned alpha = 0;
    for (std::size_t i = 1; i < e.size(); ++i) alpha += e[i];
    if (alpha != 0 && c > 0) continue;
    out.add_term({e.empty() ? 0u : e[0] + alpha}, c);
  }
  return out;
}

MultiPoly b_threshold_poly(int d, const Rational& w)
{
  const MultiPoly gt = tilde_transform(build_g_B(d));
  const auto& vars = gt.variables();
  const MultiPoly shift = MultiPoly::variable(vars, 0) + MultiPoly::constant(vars, w - 1);
  return gt - shift.pow(static_cast<unsigned>(d - 1)) * (Rational(1) / Rational(factorial(static_cast<unsigned>(d))));
}

UniPoly to_unipoly(const MultiPoly& p) { return UniPoly(p.univariate_coefficients(0)); }

Rational default_root_width() { return to_rational(1, 1000); }

BigInt largeness_threshold(int d)
{
  require_d(d);
  auto ok = [d](const BigInt& n) {
    return d <= 5 ? lower_bound_condition_wide(n, d) : lower_bound_condition_narrow(n, d);
  };
  BigInt hi = 1;
  while (!ok(hi)) hi *= 2;
  BigInt lo = hi / 2;  // ok(lo) is false unless hi == 1
  if (hi == 1) return hi;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid; else lo = mid;
  }
  return hi;
}

std::optional<BigInt> paper_threshold(int d)
{
  switch (d) {
    case 4: return BigInt(755);
    case 5: return BigInt(3056);
    case 6: return BigInt(1742);
    case 7: return BigInt(32215);
    case 8: return BigInt(1408841);
    case 9: return BigInt(73305293);
    case 10: return BigInt("4393224603");
    default: return std::nullopt;
  }
}

DegreeConfig compute_N(int d, const Rational& width)
{
  require_d(d);
  DegreeConfig cfg;
  cfg.d = d;
  cfg.w = choose_w(d);
  for (int j = 3; j <= d / 2; ++j) {
    MultiPoly t = tilde_transform(build_g_A(d, j));
    cfg.roots.push_back({"A" + std::to_string(j), t, highest_root(to_unipoly(t), width)});
  }
  MultiPoly b = b_threshold_poly(d, cfg.w);
  cfg.roots.push_back({"B", b, highest_root(to_unipoly(b), width)});

  cfg.M = 0;
  cfg.largeness_bound = largeness_threshold(d);
  cfg.N_computed = cfg.largeness_bound;
  for (const auto& r : cfg.roots) {
    if (!r.root) continue;
    cfg.M = std::max(cfg.M, BigInt(floor(r.root->hi)));
    cfg.N_computed = std::max(cfg.N_computed, root_ceiling(to_unipoly(r.poly), *r.root, cfg.w, d));
  }
  cfg.N_paper = paper_threshold(d);
  return cfg;
}

bool threshold_valid(const DegreeConfig& cfg, const BigInt& N)
{
  if (N < cfg.largeness_bound) return false;
  for (const auto& r : cfg.roots) {
    if (!r.root) continue;
    if (N < root_ceiling(to_unipoly(r.poly), *r.root, cfg.w, cfg.d)) return false;
  }
  return true;
}

}  // namespace strength
