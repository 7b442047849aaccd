#pragma once

// Fast exact evaluation of the key inequality over many l-tails at once.
//
// f(m, tail) = sum_j P_j C(m+d-j, m) - (n-m)(m+1) where P is the truncated
// product of (1-t^i)^{l_i}(1-t^{d-i})^{l_i}. P is built incrementally along
// the tail, in int64 with overflow checks; any overflow sends that single
// case to the arbitrary-precision path, so results are always exact.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "strength/numeric.hpp"

namespace strength {

struct CaseEval {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::span<const std::int64_t> tail;  // valid only during the callback
  int cmp = 0;                         // sign(lhs - rhs)
  bool small = false;                  // lhs/rhs below are meaningful
  Int128 lhs = 0;
  Int128 rhs = 0;
};

class CaseKernel {
 public:
  static constexpr int kMaxDegree = 16;

  /// Tables cover every l-entry up to `max_entry`.
  CaseKernel(int d, std::int64_t max_entry);

  int degree() const noexcept { return d_; }
  std::size_t tail_size() const noexcept { return tail_size_; }

  /// Every tail of sum m - k for m in [k, m_hi], in lexicographic order of
  /// (m, tail). Here k = n - sl.rk(n, d) + 1 is the claim level.
  void run(std::int64_t n, std::int64_t k, std::int64_t m_hi, const std::function<void(const CaseEval&)>& visit) const;

 private:
  using Coeffs = std::array<std::int64_t, kMaxDegree + 1>;
  struct Entry {
    Coeffs c{};
    bool ok = true;
  };

  const Entry& factor(std::size_t idx, std::int64_t l) const;
  bool multiply(const Coeffs& a, const Coeffs& b, Coeffs& out) const;

  int d_;
  std::size_t tail_size_;
  std::int64_t max_entry_;
  std::vector<std::vector<Entry>> table_;  // table_[idx][l], idx = i - 2
};

/// String form of a 128-bit integer.
std::string int128_to_string(Int128 v);

}  // namespace strength
