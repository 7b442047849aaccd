#include "strength/hilbert_oracle.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace strength {
namespace {

using u64 = std::uint64_t;
using u128 = UInt128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m)
{
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Arithmetic in F_p for p < 2^32, with a shortcut for 2^31 - 1.
struct Field {
  u64 p;
  bool mersenne;

  explicit Field(u64 prime) : p(prime), mersenne(prime == 2147483647u) {}

  u64 reduce(u64 x) const
  {
    if (mersenne) {
      x = (x & p) + (x >> 31);
      x = (x & p) + (x >> 31);
      return x >= p ? x - p : x;
    }
    return x % p;
  }
  u64 mul(u64 a, u64 b) const { return reduce(a * b); }
  u64 inv(u64 a) const { return powmod64(a, p - 2, p); }
};

using Exps = std::vector<std::uint8_t>;

struct ExpsHash {
  std::size_t operator()(const Exps& e) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

std::vector<Exps> monomials(std::size_t vars, int degree)
{
  std::vector<Exps> out;
  Exps cur(vars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == vars) {
      cur[i] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[i] = static_cast<std::uint8_t>(a);
      self(self, i + 1, left - a);
    }
  };
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

// v[j] += f * r[j] for p = 2^31 - 1, folded lazily: entries of v stay below
// 2^34 and are only fully reduced when inspected.
__attribute__((target_clones("avx512f", "avx2", "default"), optimize("tree-vectorize"))) void
axpy_mersenne(u64* v, const std::uint32_t* r, std::uint32_t f, std::size_t len)
{
  for (std::size_t j = 0; j < len; ++j) {
    const u64 x = v[j] + static_cast<u64>(f) * r[j];
    v[j] = (x & 0x7fffffffu) + (x >> 31);
  }
}

// Semi-echelon form: one normalized row per pivot column, zero to the left of
// its pivot. A new row is reduced only up to its first unclaimed nonzero column.
class Echelon {
 public:
  Echelon(const Field& f, std::size_t cols) : f_(f), cols_(cols), pivot_(cols, nullptr) {}

  std::size_t rank() const { return rank_; }
  bool full() const { return rank_ == cols_; }

  // v holds values below 2^34; it is consumed.
  void insert(std::vector<u64>& v)
  {
    for (std::size_t c = 0; c < cols_; ++c) {
      const u64 x = f_.reduce(v[c]);
      if (x == 0) continue;
      if (const std::uint32_t* row = pivot_[c]) {
        const auto factor = static_cast<std::uint32_t>(f_.p - x);
        if (f_.mersenne) {
          axpy_mersenne(v.data() + c, row + c, factor, cols_ - c);
        } else {
          for (std::size_t j = c; j < cols_; ++j) v[j] = (v[j] + static_cast<u64>(factor) * row[j]) % f_.p;
        }
        continue;
      }
      const u64 inv = f_.inv(x);
      auto& store = storage_.emplace_back(cols_, 0);
      store[c] = 1;
      for (std::size_t j = c + 1; j < cols_; ++j) store[j] = static_cast<std::uint32_t>(f_.mul(f_.reduce(v[j]), inv));
      pivot_[c] = store.data();
      ++rank_;
      return;
    }
  }

 private:
  const Field& f_;
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<const std::uint32_t*> pivot_;
  std::deque<std::vector<std::uint32_t>> storage_;
};

u64 rank_for_seed(std::int64_t n, const std::vector<int>& degrees, int d, const Field& field, std::seed_seq& seq,
                  u64& rows_out)
{
  const auto vars = static_cast<std::size_t>(n + 1);
  const auto cols_list = monomials(vars, d);
  std::unordered_map<Exps, std::size_t, ExpsHash> index;
  index.reserve(cols_list.size() * 2);
  for (std::size_t i = 0; i < cols_list.size(); ++i) index.emplace(cols_list[i], i);

  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<u64> coeff(0, field.p - 1);
  Echelon ech(field, cols_list.size());
  std::vector<u64> row(cols_list.size());
  rows_out = 0;
  Exps prod(vars);
  for (int e : degrees) {
    const auto terms = monomials(vars, e);
    std::vector<u64> f(terms.size());
    for (auto& c : f) c = coeff(rng);  // drawn even if unused, keeps streams aligned
    if (e > d || ech.full()) continue;
    for (const auto& mu : monomials(vars, d - e)) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        for (std::size_t i = 0; i < vars; ++i) prod[i] = static_cast<std::uint8_t>(terms[t][i] + mu[i]);
        row[index.at(prod)] = f[t];
      }
      ++rows_out;
      ech.insert(row);
      if (ech.full()) break;
    }
  }
  return ech.rank();
}

}  // namespace

bool is_prime_u64(u64 v)
{
  if (v < 2) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (v == small) return true;
    if (v % small == 0) return false;
  }
  u64 dd = v - 1;
  int s = 0;
  while ((dd & 1) == 0) {
    dd >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod64(a, dd, v);
    if (x == 1 || x == v - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, v);
      if (x == v - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

OracleResult random_ideal_hf(const OracleQuery& q)
{
  if (q.n < 0) throw std::domain_error("oracle: n must be >= 0");
  if (q.d < 0) throw std::domain_error("oracle: target degree must be >= 0");
  if (q.p >= (u64{1} << 32)) throw std::domain_error("oracle: prime must be below 2^32");
  if (!is_prime_u64(q.p)) throw std::domain_error("oracle: modulus " + std::to_string(q.p) + " is not prime");
  if (!q.profile.empty() && q.d < q.profile.max_degree())
    throw std::domain_error("oracle: target degree below the largest generator degree");
  if (q.seeds == 0) throw std::domain_error("oracle: need at least one seed");

  std::int64_t n = q.n;
  std::vector<int> degrees(q.profile.degrees().begin(), q.profile.degrees().end());
  if (q.absorb_linear) {
    // General linear forms cut out a general linear subspace; the remaining
    // forms restrict to general forms there.
    const auto lin = std::count(degrees.begin(), degrees.end(), 1);
    degrees.erase(std::remove(degrees.begin(), degrees.end(), 1), degrees.end());
    n -= lin;
  }

  OracleResult res;
  res.effective_n = n;
  const BigInt total = binom(q.n + q.d, q.d);
  if (n < 0) {
    // Linear forms span all of S_1.
    res.hf_value = q.d == 0 ? 1 : 0;
    res.ideal_dim = total - res.hf_value;
    res.seeds_used = {q.seed};
    res.ranks = {static_cast<u64>(to_int64(res.ideal_dim))};
    return res;
  }
  const BigInt cols = binom(n + q.d, q.d);
  if (cols > kMaxOracleColumns)
    throw std::domain_error("oracle: " + to_string(cols) + " columns exceeds the cap of 20000");
  res.cols = static_cast<u64>(to_int64(cols));

  const Field field(q.p);
  u64 best = 0;
  for (unsigned s = 0; s < q.seeds; ++s) {
    const u64 seed = q.seed + s;
    // The stream depends on the seed and on the whole query.
    std::vector<u64> material{seed, static_cast<u64>(q.n), static_cast<u64>(q.d), q.p};
    for (int e : q.profile.degrees()) material.push_back(static_cast<u64>(e));
    std::seed_seq seq(material.begin(), material.end());
    u64 rows = 0;
    const u64 rank = rank_for_seed(n, degrees, q.d, field, seq, rows);
    res.rows = std::max(res.rows, rows);
    res.seeds_used.push_back(seed);
    res.ranks.push_back(rank);
    if (!res.ranks.empty() && rank != res.ranks.front()) res.seeds_agree = false;
    best = std::max(best, rank);
    if (rank == res.cols) break;  // full rank cannot improve
  }
  const BigInt quotient = cols - best;
  res.hf_value = quotient;
  res.ideal_dim = total - quotient;
  return res;
}

TangentReport check_tangent_codim(std::int64_t n, const EllProfile& ells, u64 p, u64 seed, unsigned seeds)
{
  const int d = ells.d;
  if (ells.ells.front() > n) throw std::domain_error("check_tangent_codim: l_1 exceeds n");
  TangentReport rep;
  OracleQuery q{n, generator_profile(ells), d, p, seed, seeds, true};
  rep.oracle = random_ideal_hf(q);
  rep.oracle_hf = rep.oracle.hf_value;
  rep.f_value = f_eval(n, d, n - ells.ells.front(), ells.tail());
  rep.geq = rep.oracle_hf >= rep.f_value;
  rep.equality_expected = 2 * ells.r() <= n + 1;
  if (rep.equality_expected) rep.equal = rep.oracle_hf == rep.f_value;
  return rep;
}

std::string_view to_string(SfcVerdict v)
{
  switch (v) {
    case SfcVerdict::pass: return "pass";
    case SfcVerdict::fail: return "fail";
    case SfcVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

SfcReport check_sfc_known(std::int64_t n, const DegreeProfile& profile, int d, u64 p, u64 seed, unsigned seeds)
{
  SfcReport rep;
  rep.predicted = froberg_coeff(n, profile, static_cast<std::size_t>(d));
  if (profile.size() <= static_cast<std::size_t>(n + 1)) rep.regime = "complete-intersection";
  else if (!profile.empty() && d == profile.min_degree() + 1) rep.regime = "min-degree-plus-one";
  else {
    rep.regime = "none";
    return rep;
  }
  // Generators above the target degree do not reach it.
  std::vector<int> reaching;
  for (int e : profile.degrees())
    if (e <= d) reaching.push_back(e);
  OracleQuery q{n, DegreeProfile(std::move(reaching)), d, p, seed, seeds, true};
  rep.oracle_hf = random_ideal_hf(q).hf_value;
  rep.verdict = *rep.oracle_hf == rep.predicted ? SfcVerdict::pass : SfcVerdict::fail;
  return rep;
}

}  // namespace strength
