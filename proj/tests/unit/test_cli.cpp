#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<const char*> args)
{
  std::vector<const char*> argv{"strength"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = strength::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::initializer_list<const char*> args)
{
  std::vector<const char*> argv(args);
  argv.push_back("--format");
  argv.push_back("json");
  std::vector<const char*> full{"strength"};
  full.insert(full.end(), argv.begin(), argv.end());
  std::ostringstream out, err;
  const int code = strength::cli::run(static_cast<int>(full.size()), full.data(), out, err);
  REQUIRE(code == 0);
  const std::string text = out.str();
  const auto j = nlohmann::json::parse(text);
  // Canonical form survives a round trip byte for byte.
  CHECK(j.dump() + "\n" == text);
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("slice-rank")
{
  CHECK(run_json({"slice-rank", "--n", "3", "--d", "4"})["slice_rank"] == "3");
  CHECK(run_json({"slice-rank", "--n", "3", "--d", "2"})["slice_rank"] == "2");
  CHECK(run_json({"slice-rank", "--n", "1", "--d", "9"})["slice_rank"] == "1");
  CHECK(run_json({"slice-rank", "--n", "5", "--degrees", "3"})["slice_rank"] == "4");
  CHECK(run({"slice-rank", "--n", "3", "--d", "4"}).out.find("slice rank: 3") != std::string::npos);
}

TEST_CASE("f-eval, froberg and symbolic")
{
  CHECK(run_json({"f-eval", "--n", "3", "--d", "4", "--m", "2", "--ells", "1"})["f"] == "1");
  CHECK(run_json({"froberg", "--n", "2", "--degrees", "2,2", "--d", "2"})["coeff"] == "4");
  const auto s = run_json({"symbolic", "--d", "4"});
  CHECK(s["g_B"] == "1/6*m^3 - 2*m*l2 + 17/6*m + 2*l2 - 3");
  const auto s6 = run_json({"symbolic", "--d", "6", "--width", "0.001"});
  CHECK(s6["A"].size() == 1);
  CHECK(s6["A"][0]["root"]["lo_decimal"].get<std::string>().rfind("13.58", 0) == 0);
}

TEST_CASE("compute-n")
{
  const auto j = run_json({"compute-n", "--d", "4"});
  CHECK(j["N_computed"] == "755");
  CHECK(j["N_paper_valid"] == true);
}

TEST_CASE("verify exit codes and certificate")
{
  const auto j = run_json({"verify", "--d", "4", "--workers", "1"});
  CHECK(j["verdict"] == "verified");
  CHECK(j["exceptional"].size() == 2);
  CHECK(j["duration_seconds"].is_number_float());
  CHECK(run({"verify", "--d", "11"}).code == strength::cli::invalid_input);
  CHECK(run({"verify", "--d", "3"}).code == strength::cli::invalid_input);
}

TEST_CASE("verify writes a case stream and an output file")
{
  const std::string csv = "strength_test_cases.csv";
  const std::string cert = "strength_test_cert.json";
  const auto r = run({"verify", "--d", "5", "--cases-csv", csv.c_str(), "--output", cert.c_str(), "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(cert);
  const auto j = nlohmann::json::parse(in);
  std::ifstream cases(csv);
  std::string line;
  std::size_t lines = 0;
  std::getline(cases, line);
  CHECK(line == "n,d,m,l2,lhs,rhs,strict,exceptional");
  while (std::getline(cases, line)) ++lines;
  CHECK(std::to_string(lines) == j["case_count"].get<std::string>());
  std::remove(csv.c_str());
  std::remove(cert.c_str());
}

TEST_CASE("oracle modes")
{
  CHECK(run_json({"oracle", "--mode", "hf", "--n", "2", "--degrees", "2,2", "--d", "2"})["hf"] == "4");
  const auto t = run_json({"oracle", "--mode", "tangent", "--n", "3", "--d", "4", "--ells", "1,1"});
  CHECK(t["oracle_hf"] == "1");
  CHECK(t["equal"] == true);
  CHECK(run_json({"oracle", "--mode", "sfc", "--n", "2", "--degrees", "3,3,3,3", "--d", "4"})["verdict"] == "pass");
  const auto inc = run_json({"oracle", "--mode", "sfc", "--n", "2", "--degrees", "3,3,3,3", "--d", "6"});
  CHECK(inc["verdict"] == "inconclusive");
  CHECK(inc["oracle_hf"].is_null());
  CHECK(run({"oracle", "--mode", "sfc", "--n", "2", "--degrees", "3,3,3,3", "--d", "6"}).code == 0);
  CHECK(run({"oracle", "--n", "2", "--degrees", "2", "--d", "3", "--prime", "100"}).code == strength::cli::invalid_input);
}

TEST_CASE("coverage")
{
  const auto j = run_json({"coverage", "--max-n", "8", "--max-d", "12"});
  CHECK(j["cells"].size() == 7 * 11);
  const auto csv = run({"coverage", "--max-n", "3", "--max-d", "3", "--format", "csv"});
  CHECK(csv.out == "n,d,label\n2,2,red\n2,3,red\n3,2,green\n3,3,green\n");
}

TEST_CASE("invalid input")
{
  CHECK(run({"no-such-command"}).code == strength::cli::invalid_input);
  CHECK(run({"slice-rank", "--n", "abc", "--d", "3"}).code == strength::cli::invalid_input);
  CHECK(run({"slice-rank", "--n", "0", "--d", "3"}).code == strength::cli::invalid_input);
  CHECK(run({"f-eval", "--n", "3", "--d", "4", "--m", "2", "--ells", "1,2"}).code == strength::cli::invalid_input);
  CHECK(run({"symbolic", "--d", "4", "--width", "1/0"}).code == strength::cli::invalid_input);
  CHECK(run({"slice-rank", "--n", "3", "--d", "4", "--format", "xml"}).code == strength::cli::invalid_input);
  const auto e = run({"slice-rank", "--n", "0", "--d", "3"});
  CHECK(e.out.empty());
  CHECK_FALSE(e.err.empty());
}

TEST_CASE("global options may follow the subcommand or precede it")
{
  const auto a = run({"--format", "json", "slice-rank", "--n", "3", "--d", "4"});
  const auto b = run({"slice-rank", "--n", "3", "--d", "4", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

}  // TEST_SUITE
