#pragma once

// Serialisation of verification results: canonical JSON (sorted keys, no
// whitespace, integers as decimal strings) and CSV case rows.

#include <string>

#include "strength/root_isolation.hpp"
#include "strength/thresholds.hpp"
#include "strength/verifier.hpp"

namespace strength {

std::string interval_to_json(const RootInterval& iv);
std::string config_to_json(const DegreeConfig& config);
std::string case_to_json(const CaseRecord& r);
std::string certificate_to_json(const Certificate& cert);
std::string asymptotic_to_json(const AsymptoticReport& rep);

/// n,d,m,l2,...,lhs,rhs,strict,exceptional
std::string case_csv_header(int d);
std::string case_to_csv(const CaseRecord& r);

/// Digits kept in decimal approximations of interval endpoints.
inline constexpr unsigned kDecimalDigits = 6;

}  // namespace strength
