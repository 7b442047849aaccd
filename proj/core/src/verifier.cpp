#include "strength/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <tuple>
#include <random>
#include <stdexcept>
#include <thread>

#include "strength/case_kernel.hpp"
#include "strength/codim.hpp"
#include "strength/slice_rank.hpp"
#include "strength/version.hpp"

namespace strength {

std::int64_t CaseRecord::tail_sum() const { return std::accumulate(tail.begin(), tail.end(), std::int64_t{0}); }

bool record_less(const CaseRecord& a, const CaseRecord& b)
{
  return std::tie(a.n, a.m, a.tail) < std::tie(b.n, b.m, b.tail);
}

std::int64_t VerifyPlan::m_upper(std::int64_t n) const { return n < full_sweep_below ? n : std::min(n, M); }

VerifyPlan make_plan(const DegreeConfig& config, std::optional<std::int64_t> n_cap)
{
  VerifyPlan plan;
  plan.d = config.d;
  BigInt used = config.N_computed;
  if (config.N_paper) used = std::max(used, *config.N_paper);
  plan.N_used = to_int64(used);
  if (n_cap) plan.N_used = std::min(plan.N_used, *n_cap);
  plan.M = to_int64(config.M);
  // Below the largeness bound the B-statement's use of the lower bound on the
  // defect is not available, so m is not capped there.
  plan.full_sweep_below = to_int64(config.largeness_bound);
  plan.plateau = plateau_set(config.d, plan.N_used);
  return plan;
}

void enumerate_cases(const VerifyPlan& plan, const std::function<void(const CaseCoord&)>& visit)
{
  const std::size_t T = tail_length(plan.d);
  CaseCoord c;
  c.tail.assign(T, 0);
  for (std::int64_t n : plan.plateau) {
    const std::int64_t k = n - general_slice_rank(n, plan.d) + 1;
    c.n = n;
    for (std::int64_t m = k; m <= plan.m_upper(n); ++m) {
      c.m = m;
      auto rec = [&](auto&& self, std::size_t level, std::int64_t remaining) -> void {
        if (level + 1 == T) {
          c.tail[level] = remaining;
          visit(c);
          return;
        }
        for (std::int64_t l = 0; l <= remaining; ++l) {
          c.tail[level] = l;
          self(self, level + 1, remaining - l);
        }
      };
      rec(rec, 0, m - k);
    }
  }
}

std::vector<CaseCoord> expected_exceptional(int d)
{
  if (d != 4) return {};
  return {CaseCoord{3, 2, {1}}, CaseCoord{3, 3, {2}}};
}

bool Certificate::verified() const
{
  return violation_count == 0 && exceptional_as_expected && N_used_valid;
}

namespace {

struct PointResult {
  std::uint64_t cases = 0;
  std::uint64_t strict = 0;
  std::uint64_t violations = 0;
  std::vector<CaseRecord> violation_records;
  std::vector<CaseRecord> exceptional;
};

CaseRecord make_record(int d, const CaseEval& ev, const std::vector<std::int64_t>& zeros, std::int64_t k)
{
  CaseRecord r;
  r.n = ev.n;
  r.d = d;
  r.m = ev.m;
  r.tail.assign(ev.tail.begin(), ev.tail.end());
  if (ev.small) {
    r.lhs = BigInt(int128_to_string(ev.lhs));
    r.rhs = BigInt(int128_to_string(ev.rhs));
  } else {
    r.lhs = f_eval(ev.n, d, ev.m, r.tail);
    r.rhs = f_eval(ev.n, d, k, zeros);
  }
  r.holds = ev.cmp >= 0;
  r.strict = ev.cmp > 0;
  r.exceptional = is_exceptional_case(ev.n, d, ev.m, r.tail);
  return r;
}

}  // namespace

Certificate verify_degree(int d, const VerifyOptions& options)
{
  if (d < 4 || d > 10) throw std::domain_error("verify: d must be in [4, 10], got " + std::to_string(d));
  const auto start = std::chrono::steady_clock::now();

  Certificate cert;
  cert.d = d;
  cert.tool_version = STRENGTH_VERSION;
  cert.config = compute_N(d, options.root_width);
  const VerifyPlan plan = make_plan(cert.config);
  cert.N_used = plan.N_used;
  cert.N_paper_valid = cert.config.N_paper && threshold_valid(cert.config, *cert.config.N_paper);
  cert.N_used_valid = threshold_valid(cert.config, to_big(plan.N_used));
  cert.full_sweep_below = plan.full_sweep_below;
  cert.plateau_count = static_cast<std::int64_t>(plan.plateau.size());

  std::int64_t max_entry = 0;
  std::vector<std::int64_t> levels(plan.plateau.size());
  for (std::size_t i = 0; i < plan.plateau.size(); ++i) {
    const std::int64_t n = plan.plateau[i];
    levels[i] = n - general_slice_rank(n, d) + 1;
    max_entry = std::max(max_entry, plan.m_upper(n) - levels[i]);
  }
  const CaseKernel kernel(d, max_entry);
  const std::vector<std::int64_t> zeros(tail_length(d), 0);

  std::vector<PointResult> results(plan.plateau.size());
  auto work_on = [&](std::size_t i) {
    PointResult& out = results[i];
    const std::int64_t n = plan.plateau[i];
    const std::int64_t k = levels[i];
    kernel.run(n, k, plan.m_upper(n), [&](const CaseEval& ev) {
      ++out.cases;
      if (ev.cmp > 0) ++out.strict;
      const bool nonzero = std::any_of(ev.tail.begin(), ev.tail.end(), [](std::int64_t l) { return l != 0; });
      const bool exceptional = is_exceptional_case(n, d, ev.m, ev.tail);
      const bool bad = ev.cmp < 0 || (nonzero && !exceptional && ev.cmp == 0);
      if (bad) {
        ++out.violations;
        if (out.violation_records.size() < options.violation_cap)
          out.violation_records.push_back(make_record(d, ev, zeros, k));
      }
      if (exceptional) out.exceptional.push_back(make_record(d, ev, zeros, k));
      if (options.case_sink) options.case_sink(make_record(d, ev, zeros, k));
    });
  };

  const unsigned workers = options.case_sink ? 1u : std::max(1u, options.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < plan.plateau.size(); ++i) work_on(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    // Largest n first: those points carry the most cases.
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t idx; (idx = next.fetch_add(1)) < plan.plateau.size();)
            work_on(plan.plateau.size() - 1 - idx);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (auto& r : results) {
    cert.case_count += r.cases;
    cert.strict_count += r.strict;
    cert.violation_count += r.violations;
    cert.violations.insert(cert.violations.end(), r.violation_records.begin(), r.violation_records.end());
    cert.exceptional.insert(cert.exceptional.end(), r.exceptional.begin(), r.exceptional.end());
  }
  std::sort(cert.violations.begin(), cert.violations.end(), record_less);
  if (cert.violations.size() > options.violation_cap) cert.violations.resize(options.violation_cap);
  std::sort(cert.exceptional.begin(), cert.exceptional.end(), record_less);

  std::vector<CaseCoord> seen;
  for (const auto& r : cert.exceptional) seen.push_back({r.n, r.m, r.tail});
  cert.exceptional_as_expected = seen == expected_exceptional(d);

  cert.notes = {
      "cases: plateau points n <= N_used, m - sum(l) = n - sl.rk(n,d) + 1, m <= n",
      "N_used = max(N_paper, N_computed) = " + std::to_string(plan.N_used),
      "m <= M = " + std::to_string(plan.M) + " for n >= " + std::to_string(plan.full_sweep_below) +
          "; every m <= n below that",
      "both sides of each case evaluated exactly",
  };
  cert.duration_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

bool AsymptoticReport::ok() const
{
  return largeness_at_threshold && threshold_valid &&
         std::all_of(items.begin(), items.end(), [](const AsymptoticItem& i) { return i.ok(); });
}

AsymptoticReport certify_asymptotic(int d, const Rational& width)
{
  if (d < 4 || d > 10) throw std::domain_error("certify_asymptotic: d must be in [4, 10]");
  const DegreeConfig cfg = compute_N(d, width);
  const VerifyPlan plan = make_plan(cfg);
  AsymptoticReport rep;
  rep.d = d;
  for (const auto& r : cfg.roots) {
    AsymptoticItem item;
    item.statement = r.statement;
    const UniPoly p = to_unipoly(r.poly);
    item.leading_positive = p.leading() > 0;
    const Rational bound = cauchy_bound(p);
    item.positive_at_cauchy_bound = p.sign_at(bound) > 0;
    if (r.root) {
      item.positive_at_hi = p.sign_at(r.root->hi) > 0;
      item.no_root_above_hi = count_roots(sturm_sequence(p), r.root->hi, bound) == 0;
    } else {
      item.positive_at_hi = true;
      item.no_root_above_hi = count_roots(sturm_sequence(p), -bound, bound) == 0;
    }
    rep.items.push_back(item);
  }
  const BigInt next = to_big(plan.N_used) + 1;
  rep.largeness_at_threshold = d <= 5 ? lower_bound_condition_wide(next, d) : lower_bound_condition_narrow(next, d);
  rep.threshold_valid = threshold_valid(cfg, to_big(plan.N_used));
  return rep;
}

SpotCheckReport spot_check_reduction(int d, std::size_t samples, std::int64_t n_max, std::uint64_t seed)
{
  if (d < 4 || d > 10) throw std::domain_error("spot_check_reduction: d must be in [4, 10]");
  if (n_max < 2) throw std::domain_error("spot_check_reduction: n_max must be >= 2");
  std::seed_seq seq{seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n_max)};
  std::mt19937_64 rng(seq);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const std::size_t T = tail_length(d);
  SpotCheckReport rep;
  rep.d = d;
  std::size_t attempts = 0;
  while (rep.checked < samples) {
    if (++attempts > samples * 1000) throw std::runtime_error("spot_check_reduction: no room above the claim level");
    const std::int64_t n = uniform(1, n_max);
    const std::int64_t k = n - general_slice_rank(n, d) + 1;
    if (k + 1 > n) continue;
    const std::int64_t base = uniform(k + 1, n);
    const std::int64_t total = uniform(0, n - base);
    // Random composition of `total` into T parts via sorted cut points.
    std::vector<std::int64_t> cuts{0, total};
    for (std::size_t i = 0; i + 1 < T; ++i) cuts.push_back(uniform(0, total));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::int64_t> tail(T);
    for (std::size_t i = 0; i < T; ++i) tail[i] = cuts[i + 1] - cuts[i];
    const std::int64_t m = base + total;

    const KeyInequality ki = key_inequality(n, d, m, tail);
    ++rep.checked;
    const bool bad = !ki.holds || (total > 0 && !ki.exceptional && !ki.strict);
    if (bad) rep.counterexamples.push_back({n, d, m, tail, ki.lhs, ki.rhs, ki.holds, ki.strict, ki.exceptional});
  }
  return rep;
}

}  // namespace strength
