#pragma once

// Exhaustive re-check of the finite case range of the key inequality.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strength/numeric.hpp"
#include "strength/thresholds.hpp"

namespace strength {

struct CaseRecord {
  std::int64_t n = 0;
  int d = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> tail;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  bool strict = false;
  bool exceptional = false;

  std::int64_t tail_sum() const;
};

/// Orders by (n, m, tail).
bool record_less(const CaseRecord& a, const CaseRecord& b);

struct CaseCoord {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> tail;
  friend auto operator<=>(const CaseCoord&, const CaseCoord&) = default;
};

/// Which cases a run covers.
struct VerifyPlan {
  int d = 0;
  std::int64_t N_used = 0;              // max(N_paper, N_computed), or the cap
  std::int64_t M = 0;
  std::int64_t full_sweep_below = 0;    // n below this get every m up to n
  std::vector<std::int64_t> plateau;

  /// Largest m enumerated at plateau point n.
  std::int64_t m_upper(std::int64_t n) const;
};

/// Plan for a degree; `n_cap` shrinks the n-range (for tests and partial runs).
VerifyPlan make_plan(const DegreeConfig& config, std::optional<std::int64_t> n_cap = std::nullopt);

/// Every claim-level case of the plan in (n, m, tail) order.
void enumerate_cases(const VerifyPlan& plan, const std::function<void(const CaseCoord&)>& visit);

struct VerifyOptions {
  unsigned workers = 1;
  std::size_t violation_cap = 1000;
  Rational root_width = default_root_width();
  /// Receives every case in order; forces a single worker.
  std::function<void(const CaseRecord&)> case_sink;
};

struct Certificate {
  int d = 0;
  DegreeConfig config;
  std::int64_t N_used = 0;
  bool N_paper_valid = false;
  bool N_used_valid = false;
  std::int64_t full_sweep_below = 0;
  std::int64_t plateau_count = 0;
  std::uint64_t case_count = 0;
  std::uint64_t strict_count = 0;
  std::uint64_t violation_count = 0;
  std::vector<CaseRecord> violations;     // first `violation_cap`, sorted
  std::vector<CaseRecord> exceptional;    // sorted
  bool exceptional_as_expected = false;
  double duration_seconds = 0;
  std::string tool_version;
  std::vector<std::string> notes;

  bool verified() const;
  std::string verdict() const { return verified() ? "verified" : "refuted"; }
};

/// The exceptional cases the inequality is allowed to meet with equality.
std::vector<CaseCoord> expected_exceptional(int d);

/// 4 <= d <= 10; anything else is a domain error.
Certificate verify_degree(int d, const VerifyOptions& options = {});

struct AsymptoticItem {
  std::string statement;
  bool leading_positive = false;
  bool positive_at_hi = false;
  bool positive_at_cauchy_bound = false;
  bool no_root_above_hi = false;
  bool ok() const { return leading_positive && positive_at_hi && positive_at_cauchy_bound && no_root_above_hi; }
};

struct AsymptoticReport {
  int d = 0;
  std::vector<AsymptoticItem> items;
  bool largeness_at_threshold = false;   // lower-bound condition at N_used + 1
  bool threshold_valid = false;          // validity predicate at N_used
  bool ok() const;
};

AsymptoticReport certify_asymptotic(int d, const Rational& width = default_root_width());

struct SpotCheckReport {
  int d = 0;
  std::size_t checked = 0;
  std::vector<CaseRecord> counterexamples;
};

/// Random cases strictly above the claim level (m - sum l > n - sl.rk + 1), n <= n_max.
SpotCheckReport spot_check_reduction(int d, std::size_t samples, std::int64_t n_max = 60, std::uint64_t seed = 1);

}  // namespace strength
