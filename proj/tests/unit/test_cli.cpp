#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "padic_moments/cli.hpp"

using namespace padic;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_range") {
  CHECK(parse_range("1:3") == std::vector<int>{1, 2, 3});
  CHECK(parse_range("0:-2") == std::vector<int>{0, -1, -2});
  CHECK(parse_range("5") == std::vector<int>{5});
  CHECK_THROWS_AS(parse_range("a:b"), ConfigError);
}

TEST_CASE("default profiles") {
  const auto p3 = default_profile(3, OrientationKind::todd_sharp);
  CHECK(p3.precision == 4);
  CHECK(p3.nmax == 38);
  CHECK(p3.q_order == 1);
  const auto w2 = default_profile(2, OrientationKind::witten_sharp);
  CHECK(w2.precision == 7);
  CHECK(w2.q_order == 10);
  CHECK(w2.tmax == 8);
}

TEST_CASE("moments for Todd are Bernoulli constants") {
  const Run r = run({"moments", "--kind", "todd", "--p", "3", "--c", "4", "--nmax", "6"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind") == "todd");
  CHECK(j.at("entries").size() == 7);
  // M_2 = (1 - 16)(1 - 3)(-1/12) = -5/2
  const auto& terms = j.at("entries").at(2).at("series").at("terms");
  REQUIRE(terms.size() == 1);
  CHECK(terms.at(0) == nlohmann::json::array({0, 0, "-5/2"}));
  CHECK(j.at("entries").at(1).at("series").at("terms").empty());
}

TEST_CASE("moments for Witten vanish in odd positions") {
  const Run r = run({"moments", "--kind", "witten", "--nmax", "5"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  for (int n : {3, 5}) CHECK(j.at("entries").at(n).at("series").at("terms").empty());
  CHECK_FALSE(j.at("entries").at(2).at("series").at("terms").empty());
}

TEST_CASE("both routes agree") {
  const Run r = run({"moments", "--kind", "witten-sharp", "--p", "2", "--route", "both", "--nmax", "4",
                     "--Q", "3", "--tmin", "-10", "--tmax", "4"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out).at("agree") == true);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run({"moments", "--c", "1"}).code == kExitConfig);
  CHECK(run({"moments", "--p", "4"}).code == kExitConfig);
  CHECK(run({"moments", "--kind", "elliptic"}).code == kExitConfig);
  CHECK(run({"moments", "--tmin", "3"}).code == kExitConfig);
  CHECK(run({"moments", "--bogus"}).code == kExitConfig);
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"moments", "--format", "csv"}).code == kExitConfig);
  CHECK(run({"moments", "--route", "genfn", "--variant", "pole"}).code == kExitConfig);
  CHECK(run({"verify", "--nmax", "8"}).code == kExitConfig);
  const Run r = run({"moments", "--c", "1"});
  CHECK(r.err.find("config error") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("table reproduces the p=3 Todd# cell") {
  const Run r = run({"table", "--p", "3", "--kind", "todd-sharp", "--rows", "1:38", "--cols", "0:-6"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("M_1   0000₃  2220₃  0000₃  0010₃") != std::string::npos);
  const Run csv = run({"table", "--p", "3", "--rows", "1:2", "--cols", "0:-1", "--format", "csv"});
  REQUIRE(csv.code == kExitOk);
  CHECK(csv.out == "row,t^0,t^-1\r\nM_1,0000₃,2220₃\r\nM_2,1102₃,2110₃\r\n");
}

TEST_CASE("verify passes and catches corruption") {
  const Run ok = run({"verify", "--p", "3", "--imax", "2", "--kind", "todd-sharp"});
  CHECK(ok.code == kExitOk);
  const auto reports = nlohmann::json::parse(ok.out);
  CHECK(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.at("pass") == true);
  const Run bad = run({"verify", "--p", "3", "--imax", "2", "--kind", "todd-sharp", "--corrupt", "--format", "text"});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("offender q^0 t^0") != std::string::npos);
}

TEST_CASE("selfcheck") {
  const Run r = run({"selfcheck", "--p", "2", "--nmax", "6", "--Q", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("selfcheck passed") != std::string::npos);
}

TEST_CASE("output is deterministic and --out writes a file") {
  const std::vector<std::string> args = {"moments", "--kind", "witten-sharp", "--p", "3", "--nmax", "5", "--Q", "4"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const std::string path = "cli_test_out.json";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  const Run f = run(with_out);
  CHECK(f.code == kExitOk);
  CHECK(f.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);
  std::remove(path.c_str());
}
