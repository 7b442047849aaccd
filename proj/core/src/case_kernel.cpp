#include "strength/case_kernel.hpp"

#include <algorithm>
#include <stdexcept>

#include "strength/codim.hpp"
#include "strength/series.hpp"

namespace strength {
namespace {

// Values up to 2^120 in magnitude, leaving headroom for one addition.
bool to_int128(const BigInt& v, Int128& out)
{
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 120) return false;
  const BigInt a = abs(v);
  const BigInt hi = a >> 64;
  const BigInt lo = a - (hi << 64);
  const auto u = (static_cast<UInt128>(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
  out = v < 0 ? -static_cast<Int128>(u) : static_cast<Int128>(u);
  return true;
}

}  // namespace

std::string int128_to_string(Int128 v)
{
  if (v == 0) return "0";
  const bool neg = v < 0;
  UInt128 u = neg ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

CaseKernel::CaseKernel(int d, std::int64_t max_entry)
    : d_(d), tail_size_(tail_length(d)), max_entry_(max_entry)
{
  if (d < 4 || d > kMaxDegree) throw std::domain_error("CaseKernel supports 4 <= d <= 16");
  if (max_entry < 0) throw std::domain_error("CaseKernel: negative table bound");
  const auto order = static_cast<std::size_t>(d);
  table_.resize(tail_size_);
  for (std::size_t idx = 0; idx < tail_size_; ++idx) {
    const int i = static_cast<int>(idx) + 2;
    auto& row = table_[idx];
    row.resize(static_cast<std::size_t>(max_entry) + 1);
    for (std::int64_t l = 0; l <= max_entry; ++l) {
      const TruncSeries s = one_minus_t_power(i, l, order) * one_minus_t_power(d - i, l, order);
      Entry& e = row[static_cast<std::size_t>(l)];
      for (std::size_t j = 0; j <= order; ++j) {
        if (!fits_int64(s.coeff(j))) {
          e.ok = false;
          break;
        }
        e.c[j] = to_int64(s.coeff(j));
      }
    }
  }
}

const CaseKernel::Entry& CaseKernel::factor(std::size_t idx, std::int64_t l) const
{
  return table_[idx][static_cast<std::size_t>(l)];
}

bool CaseKernel::multiply(const Coeffs& a, const Coeffs& b, Coeffs& out) const
{
  for (int j = 0; j <= d_; ++j) {
    std::int64_t acc = 0;
    for (int i = 0; i <= j; ++i) {
      if (a[i] == 0 || b[j - i] == 0) continue;
      std::int64_t t;
      if (__builtin_mul_overflow(a[i], b[j - i], &t) || __builtin_add_overflow(acc, t, &acc)) return false;
    }
    out[j] = acc;
  }
  return true;
}

void CaseKernel::run(std::int64_t n, std::int64_t k, std::int64_t m_hi,
                     const std::function<void(const CaseEval&)>& visit) const
{
  if (m_hi - k > max_entry_) throw std::out_of_range("CaseKernel: tail entries exceed the table bound");
  const std::vector<std::int64_t> zeros(tail_size_, 0);

  // rhs = f(k, 0...) = C(k+d, d) - (n-k)(k+1), shared by every case here.
  const BigInt rhs_big = f_eval(n, d_, k, zeros);
  Int128 rhs = 0;
  const bool rhs_small = to_int128(rhs_big, rhs);

  std::vector<std::int64_t> tail(tail_size_, 0);
  std::vector<Coeffs> partial(tail_size_ + 1);
  partial[0].fill(0);
  partial[0][0] = 1;
  std::array<std::int64_t, kMaxDegree + 1> binoms{};

  for (std::int64_t m = k; m <= m_hi; ++m) {
    const std::int64_t s = m - k;
    // C(m + d - j, m) for j = 0..d, and (n - m)(m + 1).
    bool binoms_ok = rhs_small;
    for (int j = 0; j <= d_ && binoms_ok; ++j) {
      const BigInt b = binom(m + d_ - j, m);
      if (!fits_int64(b)) binoms_ok = false; else binoms[static_cast<std::size_t>(j)] = to_int64(b);
    }
    const Int128 linear = static_cast<Int128>(n - m) * (m + 1);

    CaseEval ev;
    ev.n = n;
    ev.m = m;

    auto evaluate = [&](const Coeffs* p) {
      ev.tail = tail;
      bool ok = binoms_ok && p != nullptr;
      Int128 acc = 0;
      for (int j = 0; ok && j <= d_; ++j) {
        Int128 t;
        if (__builtin_mul_overflow(static_cast<Int128>((*p)[static_cast<std::size_t>(j)]),
                                   static_cast<Int128>(binoms[static_cast<std::size_t>(j)]), &t) ||
            __builtin_add_overflow(acc, t, &acc))
          ok = false;
      }
      if (ok && __builtin_sub_overflow(acc, linear, &acc)) ok = false;
      if (ok) {
        ev.small = true;
        ev.lhs = acc;
        ev.rhs = rhs;
        ev.cmp = acc > rhs ? 1 : (acc < rhs ? -1 : 0);
      } else {
        ev.small = false;
        ev.cmp = sign(BigInt(f_eval(n, d_, m, tail) - rhs_big));
      }
      visit(ev);
    };

    // Depth-first over compositions of s; partial[level] is the product of the
    // first `level` factors, partial_ok[level] false once it overflowed.
    std::vector<bool> partial_ok(tail_size_ + 1, true);
    auto rec = [&](auto&& self, std::size_t level, std::int64_t remaining) -> void {
      if (level + 1 == tail_size_) {
        tail[level] = remaining;
        const Entry& e = factor(level, remaining);
        Coeffs out;
        const bool ok = partial_ok[level] && e.ok && multiply(partial[level], e.c, out);
        evaluate(ok ? &out : nullptr);
        return;
      }
      for (std::int64_t l = 0; l <= remaining; ++l) {
        tail[level] = l;
        const Entry& e = factor(level, l);
        partial_ok[level + 1] = partial_ok[level] && e.ok && multiply(partial[level], e.c, partial[level + 1]);
        self(self, level + 1, remaining - l);
      }
    };
    rec(rec, 0, s);
  }
}

}  // namespace strength
