#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strength/certificate.hpp"
#include "strength/codim.hpp"
#include "strength/hilbert_oracle.hpp"
#include "strength/series.hpp"
#include "strength/slice_rank.hpp"
#include "strength/thresholds.hpp"
#include "strength/verifier.hpp"
#include "strength/version.hpp"

namespace strength::cli {
namespace {

using json = nlohmann::json;

enum class Format { text, json, csv };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A command's result: canonical JSON plus optional custom renderings.
struct Doc {
  json data;
  std::function<void(std::ostream&)> text;
  std::function<void(std::ostream&)> csv;
  int exit_code = ok;
};

void emit_flat(const json& data, std::ostream& os, const char* sep)
{
  const json flat = data.flatten();
  for (const auto& [key, value] : flat.items()) {
    os << key << sep << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void emit(const Doc& doc, Format format, std::ostream& os)
{
  switch (format) {
    case Format::json: os << doc.data.dump() << '\n'; break;
    case Format::csv:
      if (doc.csv) doc.csv(os); else emit_flat(doc.data, os, ",");
      break;
    case Format::text:
      if (doc.text) doc.text(os); else emit_flat(doc.data, os, ": ");
      break;
  }
}

Rational parse_rational(const std::string& s)
{
  Rational q;
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (q.set_str(s, 10) != 0) throw InputError("not a rational number: " + s);
  } else {
    // Plain decimal: digits after the point become the denominator.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt num;
    if (num.set_str(digits, 10) != 0) throw InputError("not a decimal number: " + s);
    q = to_rational(num, pow(BigInt(10), static_cast<unsigned>(s.size() - dot - 1)));
  }
  if (q.get_den() == 0) throw InputError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

json interval_or_null(const std::optional<RootInterval>& iv)
{
  return iv ? json::parse(interval_to_json(*iv)) : json(nullptr);
}

json string_list(const std::vector<std::int64_t>& v)
{
  json a = json::array();
  for (auto x : v) a.push_back(std::to_string(x));
  return a;
}

unsigned default_workers()
{
  if (const char* env = std::getenv("STRENGTH_VERIFY_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InputError("STRENGTH_VERIFY_WORKERS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---- commands -------------------------------------------------------------

Doc cmd_slice_rank(std::int64_t n, std::optional<int> d, const std::vector<int>& degrees)
{
  Doc doc;
  if (!degrees.empty()) {
    const DegreeProfile profile(degrees);
    const auto r = simultaneous_slice_rank(n, profile);
    json deg = json::array();
    for (int e : profile.degrees()) deg.push_back(std::to_string(e));
    doc.data = {{"n", std::to_string(n)}, {"degrees", deg}, {"slice_rank", std::to_string(r)}};
    doc.text = [r](std::ostream& os) { os << "simultaneous slice rank: " << r << '\n'; };
    return doc;
  }
  if (!d) throw InputError("slice-rank needs --d or --degrees");
  const auto r = general_slice_rank(n, *d);
  doc.data = {{"n", std::to_string(n)}, {"d", std::to_string(*d)}, {"slice_rank", std::to_string(r)}};
  if (*d >= 3) {
    const RootBound b = root_poly_floor(n, *d);
    doc.data["defect"] = std::to_string(b.floor_a);
    doc.data["upper"] = to_string(b.upper);
    doc.data["upper_decimal"] = to_decimal(b.upper, kDecimalDigits);
    doc.data["lower"] = b.lower ? json(to_string(*b.lower)) : json(nullptr);
    doc.data["lower_decimal"] = b.lower ? json(to_decimal(*b.lower, kDecimalDigits)) : json(nullptr);
    doc.data["w"] = to_string(b.w);
    // delta for k-planes around the transition k = n - sl.rk.
    json delta = json::array();
    const std::int64_t top = std::min(n - 1, b.floor_a + 1);
    for (std::int64_t k = std::max<std::int64_t>(0, b.floor_a - 1); k <= top; ++k)
      delta.push_back({{"k", std::to_string(k)}, {"delta", to_string(fano_delta(n, *d, k))}});
    doc.data["fano_delta"] = delta;
  }
  doc.text = [data = doc.data](std::ostream& os) {
    os << "slice rank: " << data["slice_rank"].get<std::string>() << '\n';
    if (data.contains("defect")) {
      os << "defect n - sl.rk: " << data["defect"].get<std::string>() << '\n';
      os << "root bounds: (" << (data["lower"].is_null() ? std::string("-") : data["lower_decimal"].get<std::string>())
         << ", " << data["upper_decimal"].get<std::string>() << "]\n";
      for (const auto& row : data["fano_delta"])
        os << "delta(k=" << row["k"].get<std::string>() << ") = " << row["delta"].get<std::string>() << '\n';
    }
  };
  return doc;
}

Doc cmd_f_eval(std::int64_t n, int d, std::int64_t m, const std::vector<std::int64_t>& tail)
{
  const BigInt a = f_eval(n, d, m, tail);
  const BigInt b = f_eval_series(n, d, m, tail);
  if (a != b) throw std::logic_error("f_eval paths disagree");
  Doc doc;
  doc.data = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"m", std::to_string(m)},
              {"tail", string_list(tail)}, {"f", to_string(a)}};
  doc.text = [v = to_string(a)](std::ostream& os) { os << v << '\n'; };
  return doc;
}

Doc cmd_froberg(std::int64_t n, const std::vector<int>& degrees, int d)
{
  if (d < 0) throw InputError("--d must be >= 0");
  const DegreeProfile profile(degrees);
  const TruncSeries s = froberg_series(n, profile, static_cast<std::size_t>(d));
  const TruncSeries br = bracket(s);
  json raw = json::array(), bracketed = json::array();
  for (std::size_t i = 0; i <= s.order(); ++i) {
    raw.push_back(to_string(s.coeff(i)));
    bracketed.push_back(to_string(br.coeff(i)));
  }
  Doc doc;
  doc.data = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"series", raw},
              {"bracketed", bracketed}, {"coeff", to_string(br.coeff(static_cast<std::size_t>(d)))}};
  doc.text = [data = doc.data](std::ostream& os) { os << data["coeff"].get<std::string>() << '\n'; };
  return doc;
}

json statement_json(const StatementRoot& r)
{
  return {{"statement", r.statement}, {"polynomial", r.poly.to_string()}, {"root", interval_or_null(r.root)}};
}

Doc cmd_symbolic(int d, const Rational& width)
{
  Doc doc;
  const Rational w = choose_w(d);
  const MultiPoly gB = build_g_B(d);
  doc.data["d"] = std::to_string(d);
  doc.data["w"] = to_string(w);
  doc.data["g_B"] = gB.to_string();
  doc.data["g_B_tilde"] = tilde_transform(gB).to_string();
  const MultiPoly bt = b_threshold_poly(d, w);
  doc.data["B"] = statement_json({"B", bt, highest_root(to_unipoly(bt), width)});
  json a = json::array();
  for (int j = 3; j <= d / 2; ++j) {
    const MultiPoly g = build_g_A(d, j);
    const MultiPoly t = tilde_transform(g);
    json entry = statement_json({"A" + std::to_string(j), t, highest_root(to_unipoly(t), width)});
    entry["g"] = g.to_string();
    a.push_back(entry);
  }
  doc.data["A"] = a;
  doc.text = [data = doc.data](std::ostream& os) {
    auto root_line = [&](const json& s) {
      if (s["root"].is_null()) return std::string("no real root");
      return "largest root in (" + s["root"]["lo_decimal"].get<std::string>() + ", " +
             s["root"]["hi_decimal"].get<std::string>() + ")";
    };
    os << "g_B = " << data["g_B"].get<std::string>() << '\n';
    os << "tilde g_B = " << data["g_B_tilde"].get<std::string>() << '\n';
    os << "B threshold = " << data["B"]["polynomial"].get<std::string>() << "; " << root_line(data["B"]) << '\n';
    for (const auto& s : data["A"]) {
      os << s["statement"].get<std::string>() << ": g = " << s["g"].get<std::string>() << '\n';
      os << "  tilde = " << s["polynomial"].get<std::string>() << "; " << root_line(s) << '\n';
    }
  };
  return doc;
}

Doc cmd_compute_n(int d, const Rational& width)
{
  const DegreeConfig cfg = compute_N(d, width);
  Doc doc;
  doc.data = json::parse(config_to_json(cfg));
  doc.data["N_computed_valid"] = threshold_valid(cfg, cfg.N_computed);
  doc.data["N_paper_valid"] = cfg.N_paper ? json(threshold_valid(cfg, *cfg.N_paper)) : json(nullptr);
  doc.text = [data = doc.data](std::ostream& os) {
    os << "w: " << data["w"].get<std::string>() << '\n';
    for (const auto& r : data["roots"]) {
      os << r["statement"].get<std::string>() << ": ";
      if (r["root"].is_null()) os << "no real root\n";
      else os << "(" << r["root"]["lo_decimal"].get<std::string>() << ", " << r["root"]["hi_decimal"].get<std::string>() << ")\n";
    }
    os << "M: " << data["M"].get<std::string>() << '\n';
    os << "N_computed: " << data["N_computed"].get<std::string>() << '\n';
    if (!data["N_paper"].is_null())
      os << "N_paper: " << data["N_paper"].get<std::string>() << (data["N_paper_valid"].get<bool>() ? " (valid)" : " (fails)")
         << '\n';
  };
  return doc;
}

Doc cmd_verify(int d, unsigned workers, const Rational& width, std::size_t cap, const std::string& cases_csv)
{
  VerifyOptions opts;
  opts.workers = workers;
  opts.root_width = width;
  opts.violation_cap = cap;
  std::ofstream csv_out;
  if (!cases_csv.empty()) {
    csv_out.open(cases_csv);
    if (!csv_out) throw InputError("cannot open " + cases_csv);
    csv_out << case_csv_header(d) << '\n';
    opts.case_sink = [&csv_out](const CaseRecord& r) { csv_out << case_to_csv(r) << '\n'; };
  }
  const Certificate cert = verify_degree(d, opts);
  Doc doc;
  doc.data = json::parse(certificate_to_json(cert));
  doc.exit_code = cert.verified() ? ok : refuted;
  doc.text = [data = doc.data](std::ostream& os) {
    os << "d=" << data["d"].get<std::string>() << ": " << data["verdict"].get<std::string>() << '\n';
    os << "N_used: " << data["config"]["N_used"].get<std::string>() << "  M: " << data["config"]["M"].get<std::string>()
       << '\n';
    os << "plateau points: " << data["plateau_count"].get<std::string>() << "  cases: " << data["case_count"].get<std::string>()
       << "  violations: " << data["violation_count"].get<std::string>() << '\n';
    for (const auto& r : data["exceptional"]) {
      os << "exceptional: n=" << r["n"].get<std::string>() << " m=" << r["m"].get<std::string>() << " tail=";
      for (const auto& l : r["tail"]) os << l.get<std::string>() << ' ';
      os << "lhs=rhs=" << r["lhs"].get<std::string>() << '\n';
    }
    os << "duration: " << data["duration_seconds"].get<double>() << " s\n";
  };
  doc.csv = [cert](std::ostream& os) {
    os << case_csv_header(cert.d) << '\n';
    for (const auto& r : cert.violations) os << case_to_csv(r) << '\n';
    for (const auto& r : cert.exceptional) os << case_to_csv(r) << '\n';
  };
  return doc;
}

Doc cmd_oracle(const std::string& mode, std::int64_t n, std::optional<int> d, const std::vector<int>& degrees,
               const std::vector<std::int64_t>& ells, std::uint64_t prime, std::uint64_t seed, unsigned seeds)
{
  Doc doc;
  if (mode == "tangent") {
    if (!d) throw InputError("oracle --mode tangent needs --d");
    const EllProfile prof = EllProfile::make(*d, ells);
    const TangentReport rep = check_tangent_codim(n, prof, prime, seed, seeds);
    doc.data = {{"mode", mode},
                {"n", std::to_string(n)},
                {"d", std::to_string(*d)},
                {"ells", string_list(ells)},
                {"oracle_hf", to_string(rep.oracle_hf)},
                {"f_value", to_string(rep.f_value)},
                {"geq", rep.geq},
                {"equality_expected", rep.equality_expected},
                {"equal", rep.equal ? json(*rep.equal) : json(nullptr)},
                {"seeds_used", string_list(std::vector<std::int64_t>(rep.oracle.seeds_used.begin(), rep.oracle.seeds_used.end()))},
                {"seeds_agree", rep.oracle.seeds_agree}};
    doc.exit_code = rep.geq && rep.equal.value_or(true) ? ok : refuted;
    return doc;
  }
  if (!d) throw InputError("oracle needs --d");
  const DegreeProfile profile(degrees);
  if (mode == "sfc") {
    const SfcReport rep = check_sfc_known(n, profile, *d, prime, seed, seeds);
    doc.data = {{"mode", mode},
                {"n", std::to_string(n)},
                {"d", std::to_string(*d)},
                {"regime", rep.regime},
                {"verdict", std::string(to_string(rep.verdict))},
                {"predicted", to_string(rep.predicted)},
                {"oracle_hf", rep.oracle_hf ? json(to_string(*rep.oracle_hf)) : json(nullptr)}};
    doc.exit_code = rep.verdict == SfcVerdict::fail ? refuted : ok;
    return doc;
  }
  if (mode != "hf") throw InputError("unknown oracle mode " + mode);
  const OracleResult res = random_ideal_hf(OracleQuery{n, profile, *d, prime, seed, seeds, true});
  json ranks = json::array();
  for (auto r : res.ranks) ranks.push_back(std::to_string(r));
  doc.data = {{"mode", mode},
              {"n", std::to_string(n)},
              {"d", std::to_string(*d)},
              {"hf", to_string(res.hf_value)},
              {"ideal_dim", to_string(res.ideal_dim)},
              {"rows", std::to_string(res.rows)},
              {"cols", std::to_string(res.cols)},
              {"effective_n", std::to_string(res.effective_n)},
              {"seeds_used", string_list(std::vector<std::int64_t>(res.seeds_used.begin(), res.seeds_used.end()))},
              {"ranks", ranks},
              {"seeds_agree", res.seeds_agree}};
  doc.text = [v = to_string(res.hf_value)](std::ostream& os) { os << v << '\n'; };
  return doc;
}

Doc cmd_coverage(std::int64_t min_n, std::int64_t max_n, int min_d, int max_d)
{
  Doc doc;
  json cells = json::array();
  for (std::int64_t n = min_n; n <= max_n; ++n)
    for (int d = min_d; d <= max_d; ++d)
      cells.push_back({{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"label", std::string(to_string(coverage_cell(n, d)))}});
  doc.data = {{"cells", cells}};
  doc.csv = [cells](std::ostream& os) {
    os << "n,d,label\n";
    for (const auto& c : cells)
      os << c["n"].get<std::string>() << ',' << c["d"].get<std::string>() << ',' << c["label"].get<std::string>() << '\n';
  };
  doc.text = [=](std::ostream& os) {
    os << "n\\d";
    for (int d = min_d; d <= max_d; ++d) os << '\t' << d;
    os << '\n';
    for (std::int64_t n = min_n; n <= max_n; ++n) {
      os << n;
      for (int d = min_d; d <= max_d; ++d) os << '\t' << to_string(coverage_cell(n, d));
      os << '\n';
    }
  };
  return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Generic slice rank, strength codimensions and their finite verification"};
  app.set_version_flag("--version", STRENGTH_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", output_path, "Write the document to this file instead of stdout");

  std::int64_t n = 0, m = 0;
  std::optional<int> d;
  std::vector<int> degrees;
  std::vector<std::int64_t> ells;
  std::string width_text = "1/1000";
  unsigned workers = 0;
  std::size_t cap = 1000;
  std::string cases_csv;
  std::uint64_t prime = kDefaultPrime, seed = 1;
  unsigned seeds = 2;
  std::string mode = "hf";
  std::int64_t min_n = 2, max_n = 8;
  int min_d = 2, max_d = 12;

  auto* sr = app.add_subcommand("slice-rank", "Generic (or simultaneous) slice rank");
  sr->add_option("--n", n)->required();
  auto* sr_d = sr->add_option("--d", d);
  auto* sr_deg = sr->add_option("--degrees", degrees)->delimiter(',');
  sr_d->excludes(sr_deg);

  auto* fe = app.add_subcommand("f-eval", "Evaluate f_{n,d}(m, l_2, ...)");
  fe->add_option("--n", n)->required();
  fe->add_option("--d", d)->required();
  fe->add_option("--m", m)->required();
  fe->add_option("--ells", ells, "Tail l_2,...,l_{floor(d/2)}")->delimiter(',');

  auto* fr = app.add_subcommand("froberg", "Bracketed generic Hilbert series prediction");
  fr->add_option("--n", n)->required();
  fr->add_option("--degrees", degrees)->delimiter(',');
  fr->add_option("--d", d)->required();

  auto* sy = app.add_subcommand("symbolic", "Bounding polynomials and their largest roots");
  sy->add_option("--d", d)->required();
  sy->add_option("--width", width_text, "Root interval width, e.g. 1/1000 or 0.001");

  auto* cn = app.add_subcommand("compute-n", "Recompute the degree threshold N");
  cn->add_option("--d", d)->required();
  cn->add_option("--width", width_text);

  auto* ve = app.add_subcommand("verify", "Exhaustive check of the finite case range");
  ve->add_option("--d", d)->required();
  ve->add_option("--workers", workers, "Worker threads (default: $STRENGTH_VERIFY_WORKERS or all cores)");
  ve->add_option("--width", width_text);
  ve->add_option("--violation-cap", cap);
  ve->add_option("--cases-csv", cases_csv, "Stream every case to this CSV file");

  auto* orc = app.add_subcommand("oracle", "Hilbert function of random ideals over F_p");
  orc->add_option("--mode", mode)->check(CLI::IsMember({"hf", "tangent", "sfc"}));
  orc->add_option("--n", n)->required();
  orc->add_option("--d", d);
  orc->add_option("--degrees", degrees)->delimiter(',');
  orc->add_option("--ells", ells, "Full profile l_1,...,l_{floor(d/2)} (tangent mode)")->delimiter(',');
  orc->add_option("--prime", prime);
  orc->add_option("--seed", seed);
  orc->add_option("--seeds", seeds);

  auto* co = app.add_subcommand("coverage", "Which known result covers each (n, d)");
  co->add_option("--min-n", min_n);
  co->add_option("--max-n", max_n);
  co->add_option("--min-d", min_d);
  co->add_option("--max-d", max_d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion& e) {
    out << STRENGTH_VERSION << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }

  try {
    const Format format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;
    Doc doc;
    if (sr->parsed()) doc = cmd_slice_rank(n, d, degrees);
    else if (fe->parsed()) doc = cmd_f_eval(n, *d, m, ells);
    else if (fr->parsed()) doc = cmd_froberg(n, degrees, *d);
    else if (sy->parsed()) doc = cmd_symbolic(*d, parse_rational(width_text));
    else if (cn->parsed()) doc = cmd_compute_n(*d, parse_rational(width_text));
    else if (ve->parsed()) doc = cmd_verify(*d, workers ? workers : default_workers(), parse_rational(width_text), cap, cases_csv);
    else if (orc->parsed()) doc = cmd_oracle(mode, n, d, degrees, ells, prime, seed, seeds);
    else if (co->parsed()) doc = cmd_coverage(min_n, max_n, min_d, max_d);

    if (output_path.empty()) {
      emit(doc, format, out);
    } else {
      std::ofstream file(output_path);
      if (!file) throw InputError("cannot open " + output_path);
      emit(doc, format, file);
    }
    return doc.exit_code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace strength::cli
