#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pprime/cli.hpp"
#include "pprime/errors.hpp"
#include "pprime/report.hpp"

using namespace pprime;

namespace
{

struct Outcome
{
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parsed(const Outcome &o) { return Json::parse(o.out); }

Json without_timing(Json j)
{
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("report JSON round trip")
{
  Report r;
  r.command = "demo";
  r.parameters = {{"limit", 7}};
  r.rows.push_back({{"x", 1}, {"pass", true}});
  r.rows.push_back({{"x", 2}, {"skipped", true}});
  r.seed = 99;
  r.elapsed_ms = 1.5;
  r.finalize();
  CHECK(r.status == "partial");
  CHECK(report_from_json(to_json(r)) == r);
  CHECK(report_from_json(Json::parse(to_json(r).dump())) == r);

  r.rows.push_back({{"x", 3}, {"pass", false}});
  r.finalize();
  CHECK(r.status == "fail");
  CHECK(r.counters["failing"] == 1);
}

TEST_CASE("malformed reports are rejected")
{
  CHECK_THROWS_AS(report_from_json(Json::object()), ParameterError);
  Report r;
  r.finalize();
  Json j = to_json(r);
  j["schema"] = 42;
  CHECK_THROWS_AS(report_from_json(j), ParameterError);
}

TEST_CASE("CSV flattening")
{
  Report r;
  r.rows.push_back({{"a", 1}, {"list", {1, 2}}, {"pass", true}});
  r.rows.push_back({{"a", 2}, {"text", "x,y"}});
  CHECK(to_csv(r) == "a,list,pass,text\n1,1;2,true,\n2,,,\"x,y\"\n");
}

TEST_CASE("landau command")
{
  const auto o = invoke({"landau", "--limit", "300"});
  REQUIRE(o.code == cli::kPass);
  const Json j = parsed(o);
  CHECK(j["tool"] == "pprime");
  CHECK(j["status"] == "pass");
  CHECK(j["counters"]["primes"] == Json({5, 17, 37, 101, 197, 257}));
  CHECK(j["rows"][0]["degenerate"] == true);
}

TEST_CASE("frobenius command agrees with the engine")
{
  const auto o = invoke({"frobenius", "--p", "5"});
  REQUIRE(o.code == cli::kPass);
  const Json row = parsed(o)["rows"][0];
  CHECK(row["pprime_count"] == 4);
  CHECK(row["engine_agrees"] == true);
  CHECK(row["degrees"] == Json({1, 1, 2, 2}));
}

TEST_CASE("output is deterministic apart from timing")
{
  const auto a = invoke({"--seed", "7", "degrees", "--group", "S5", "--p", "5"});
  const auto b = invoke({"--seed", "7", "degrees", "--group", "S5", "--p", "5"});
  REQUIRE(a.code == cli::kPass);
  CHECK(without_timing(parsed(a)).dump() == without_timing(parsed(b)).dump());
  CHECK(parsed(a)["seed"] == 7);
  CHECK(parsed(a)["rows"][0]["pprime_count"] == 5);

  const auto c = invoke({"--format", "csv", "torus-search", "--qmax", "64", "--nmax", "6"});
  const auto d = invoke({"--format", "csv", "torus-search", "--qmax", "64", "--nmax", "6"});
  CHECK(c.out == d.out);
}

TEST_CASE("exit codes")
{
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"bogus"}).code == cli::kUsage);
  CHECK(invoke({"--help"}).code == cli::kPass);
  CHECK(invoke({"frobenius", "--p", "15"}).code == cli::kUsage);
  CHECK(invoke({"degrees", "--group", "Q8"}).code == cli::kUsage);
  CHECK(invoke({"bounds", "--table1", "--table2"}).code == cli::kUsage);
  CHECK(invoke({"--format", "xml", "landau"}).code == cli::kUsage);
  CHECK(invoke({"solvable", "--p", "5", "--r", "7"}).code == cli::kUsage);

  const auto fail = invoke({"bounds", "--classical", "--family", "bc", "--grid", "8,2,3"});
  CHECK(fail.code == cli::kFail);
  CHECK(parsed(fail)["status"] == "fail");
}

TEST_CASE("group files")
{
  const auto dir = std::filesystem::temp_directory_path() / "pprime_test_groups";
  std::filesystem::create_directories(dir);
  const auto perms = dir / "s3.json";
  std::ofstream(perms) << R"({"generators": [[1, 0, 2], [1, 2, 0]]})";
  const auto table = dir / "c3.json";
  std::ofstream(table) << R"({"table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})";

  auto o = invoke({"degrees", "--group", perms.string()});
  REQUIRE(o.code == cli::kPass);
  CHECK(parsed(o)["rows"][0]["degrees"] == Json({1, 1, 2}));
  o = invoke({"degrees", "--group", table.string()});
  REQUIRE(o.code == cli::kPass);
  CHECK(parsed(o)["rows"][0]["degrees"] == Json({1, 1, 1}));
  std::filesystem::remove_all(dir);
}

TEST_CASE("report directory")
{
  const auto dir = std::filesystem::temp_directory_path() / "pprime_test_reports";
  std::filesystem::remove_all(dir);
  setenv("PPRIME_REPORT_DIR", dir.c_str(), 1);
  const auto o = invoke({"--format", "csv", "landau", "--limit", "50"});
  unsetenv("PPRIME_REPORT_DIR");
  REQUIRE(o.code == cli::kPass);
  std::ifstream in(dir / "landau.csv");
  std::stringstream saved;
  saved << in.rdbuf();
  CHECK(saved.str() == o.out);
  std::filesystem::remove_all(dir);
}
