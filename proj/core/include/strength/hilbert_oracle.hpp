#pragma once

// Hilbert function of ideals generated by random forms over F_p, computed as
// the rank of a Macaulay matrix. Random forms stand in for general ones; the
// rank can only drop under specialisation, so the max over seeds is kept.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strength/codim.hpp"
#include "strength/numeric.hpp"
#include "strength/series.hpp"

namespace strength {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kMaxOracleColumns = 20000;

struct OracleQuery {
  std::int64_t n = 0;             // n + 1 variables
  DegreeProfile profile;
  int d = 0;                      // target degree
  std::uint64_t p = kDefaultPrime;
  std::uint64_t seed = 1;
  unsigned seeds = 2;             // independent specialisations, max rank kept
  bool absorb_linear = true;      // quotient by the linear generators first
};

struct OracleResult {
  BigInt hf_value;                // dim (S/I)_d
  BigInt ideal_dim;               // dim I_d = rank
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::int64_t effective_n = 0;   // n after absorbing linear generators
  std::vector<std::uint64_t> seeds_used;
  std::vector<std::uint64_t> ranks;   // per seed, same order
  bool seeds_agree = true;
};

/// Deterministic Miller-Rabin, exact for 64-bit inputs.
bool is_prime_u64(std::uint64_t v);

/// Throws std::domain_error for a non-prime or >= 2^32 modulus, d below the
/// largest generator degree, or a matrix with more than 20000 columns.
OracleResult random_ideal_hf(const OracleQuery& q);

struct TangentReport {
  BigInt oracle_hf;
  BigInt f_value;                 // f_{n,d}(n - l_1, l_2, ...)
  bool geq = false;               // oracle >= f
  bool equality_expected = false; // 2r <= n + 1
  std::optional<bool> equal;      // set when equality is expected
  OracleResult oracle;
};

TangentReport check_tangent_codim(std::int64_t n, const EllProfile& ells, std::uint64_t p = kDefaultPrime,
                                  std::uint64_t seed = 1, unsigned seeds = 2);

enum class SfcVerdict { pass, fail, inconclusive };
std::string_view to_string(SfcVerdict v);

struct SfcReport {
  SfcVerdict verdict = SfcVerdict::inconclusive;
  std::string regime;             // "complete-intersection", "min-degree-plus-one" or "none"
  std::optional<BigInt> oracle_hf;
  BigInt predicted;
};

/// Compares the oracle with the bracketed prediction where it is a theorem:
/// at most n+1 generators, or target degree min(d_i) + 1.
SfcReport check_sfc_known(std::int64_t n, const DegreeProfile& profile, int d, std::uint64_t p = kDefaultPrime,
                          std::uint64_t seed = 1, unsigned seeds = 2);

}  // namespace strength
