#include "strength/certificate.hpp"

#include <json.hpp>

#include "strength/codim.hpp"

namespace strength {
namespace {

using json = nlohmann::json;

json interval_json(const RootInterval& iv)
{
  return json{{"lo", to_string(iv.lo)},
              {"hi", to_string(iv.hi)},
              {"lo_decimal", to_decimal(iv.lo, kDecimalDigits)},
              {"hi_decimal", to_decimal(iv.hi, kDecimalDigits)},
              {"width", to_string(iv.width())}};
}

json config_json(const DegreeConfig& c)
{
  json roots = json::array();
  for (const auto& r : c.roots) {
    roots.push_back(json{{"statement", r.statement},
                         {"polynomial", r.poly.to_string()},
                         {"root", r.root ? interval_json(*r.root) : json(nullptr)}});
  }
  return json{{"d", std::to_string(c.d)},
              {"w", to_string(c.w)},
              {"roots", roots},
              {"M", to_string(c.M)},
              {"largeness_bound", to_string(c.largeness_bound)},
              {"N_paper", c.N_paper ? json(to_string(*c.N_paper)) : json(nullptr)},
              {"N_computed", to_string(c.N_computed)}};
}

json case_json(const CaseRecord& r)
{
  json tail = json::array();
  for (auto l : r.tail) tail.push_back(std::to_string(l));
  return json{{"n", std::to_string(r.n)},       {"d", std::to_string(r.d)},   {"m", std::to_string(r.m)},
              {"tail", tail},                   {"lhs", to_string(r.lhs)},    {"rhs", to_string(r.rhs)},
              {"holds", r.holds},               {"strict", r.strict},         {"exceptional", r.exceptional}};
}

}  // namespace

std::string interval_to_json(const RootInterval& iv) { return interval_json(iv).dump(); }
std::string config_to_json(const DegreeConfig& config) { return config_json(config).dump(); }
std::string case_to_json(const CaseRecord& r) { return case_json(r).dump(); }

std::string certificate_to_json(const Certificate& cert)
{
  json violations = json::array();
  for (const auto& r : cert.violations) violations.push_back(case_json(r));
  json exceptional = json::array();
  for (const auto& r : cert.exceptional) exceptional.push_back(case_json(r));
  json config = config_json(cert.config);
  config["N_used"] = std::to_string(cert.N_used);
  config["N_paper_valid"] = cert.N_paper_valid;
  config["N_used_valid"] = cert.N_used_valid;
  json out{{"d", std::to_string(cert.d)},
           {"verdict", cert.verdict()},
           {"tool_version", cert.tool_version},
           {"duration_seconds", cert.duration_seconds},
           {"config", config},
           {"full_sweep_below", std::to_string(cert.full_sweep_below)},
           {"plateau_count", std::to_string(cert.plateau_count)},
           {"case_count", std::to_string(cert.case_count)},
           {"strict_count", std::to_string(cert.strict_count)},
           {"violation_count", std::to_string(cert.violation_count)},
           {"violations", violations},
           {"exceptional", exceptional},
           {"exceptional_as_expected", cert.exceptional_as_expected},
           {"notes", cert.notes}};
  return out.dump();
}

std::string asymptotic_to_json(const AsymptoticReport& rep)
{
  json items = json::array();
  for (const auto& i : rep.items) {
    items.push_back(json{{"statement", i.statement},
                         {"leading_positive", i.leading_positive},
                         {"positive_at_hi", i.positive_at_hi},
                         {"positive_at_cauchy_bound", i.positive_at_cauchy_bound},
                         {"no_root_above_hi", i.no_root_above_hi}});
  }
  return json{{"d", std::to_string(rep.d)},
              {"items", items},
              {"largeness_at_threshold", rep.largeness_at_threshold},
              {"threshold_valid", rep.threshold_valid},
              {"ok", rep.ok()}}
      .dump();
}

std::string case_csv_header(int d)
{
  std::string h = "n,d,m";
  for (int i = 2; i <= d / 2; ++i) h += ",l" + std::to_string(i);
  return h + ",lhs,rhs,strict,exceptional";
}

std::string case_to_csv(const CaseRecord& r)
{
  std::string s = std::to_string(r.n) + "," + std::to_string(r.d) + "," + std::to_string(r.m);
  for (auto l : r.tail) s += "," + std::to_string(l);
  s += "," + to_string(r.lhs) + "," + to_string(r.rhs);
  s += r.strict ? ",1" : ",0";
  s += r.exceptional ? ",1" : ",0";
  return s;
}

}  // namespace strength
