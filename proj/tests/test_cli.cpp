#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "riccati/csv.hpp"

namespace {

std::string cli_path() {
  if (const char* env = std::getenv("RICCATI_CLI")) return env;
  return "../tools/riccati";  // ctest working directory fallback
}

int run_cli(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: verify exits 0 and reruns are byte-identical") {
  const std::string args =
      "verify --kappa 1 --c 1 --grid 0:1.4:500 --report cli_verify_1.json";
  REQUIRE(run_cli(args) == 0);
  REQUIRE(run_cli("verify --kappa 1 --c 1 --grid 0:1.4:500 --report cli_verify_2.json") == 0);
  const std::string a = slurp("cli_verify_1.json");
  CHECK(!a.empty());
  CHECK(a == slurp("cli_verify_2.json"));
}

TEST_CASE("cli: family trace is deterministic and round-trips at 17 digits") {
  const std::string base =
      "family --kappa -1 --c 1 --lambda 2 --grid 0:4:200 --output cli_family_";
  REQUIRE(run_cli(base + "1.csv --report cli_family_1.json") == 0);
  REQUIRE(run_cli(base + "2.csv --report cli_family_2.json") == 0);
  const std::string text = slurp("cli_family_1.csv");
  REQUIRE(!text.empty());
  CHECK(text == slurp("cli_family_2.csv"));

  // header and exact numeric round trip
  std::istringstream is(text);
  const auto cols = riccati::io::read_csv(is);
  REQUIRE(cols.size() == 4);
  CHECK(cols[0].name == "eta");
  CHECK(cols[1].name == "u_g");
  CHECK(cols[2].name == "c_family");
  CHECK(cols[3].name == "w_g");
  std::ostringstream os;
  riccati::io::write_csv(os, cols);
  CHECK(os.str() == text);
}

TEST_CASE("cli: dirac2 residual report passes at 1e-8") {
  REQUIRE(run_cli("dirac2 --kappa 1 --c 1 --K 1 --A 1 --B 0 --grid 0.05:1.3:400 "
                  "--output cli_d2.csv --report cli_d2.json") == 0);
  const std::string rep = slurp("cli_d2.json");
  CHECK(rep.find("\"pass\": true") != std::string::npos);
  std::istringstream is(slurp("cli_d2.csv"));
  const auto cols = riccati::io::read_csv(is);
  REQUIRE(cols.size() == 3);
  CHECK(cols[1].name == "w2_re");
  CHECK(cols[2].name == "w2_im");
  CHECK(cols[0].values.size() == 400);
}

TEST_CASE("cli: json trace format") {
  REQUIRE(run_cli("dirac1 --kappa 1 --c 1 --grid 0:1.2:50 --format json "
                  "--output cli_d1.json --report cli_d1_rep.json") == 0);
  const std::string t = slurp("cli_d1.json");
  CHECK(t.find("\"columns\"") != std::string::npos);
  CHECK(t.find("\"w1\"") != std::string::npos);
}

TEST_CASE("cli: exit code 1 on failed verification") {
  // reduction of order does not solve the partner equation for K != 0
  CHECK(run_cli("dirac2 --kappa 1 --c 1 --K 1 --k 1 --A 0.5 --B 0.5 --emit-w1 "
                "--grid 0.1:1.2:100 --report cli_d2_fail.json") == 1);
}

TEST_CASE("cli: exit code 2 on configuration errors") {
  CHECK(run_cli("family --kappa 1 --grid nonsense") == 2);
  CHECK(run_cli("family --kappa 1 --grid -1:2:100") == 2);  // half line
  CHECK(run_cli("family --kappa 1 --c 0 --grid 0:1:100") == 2);
  CHECK(run_cli("family --kappa 3 --grid 0:1:100") == 2);
  CHECK(run_cli("") == 2);  // missing subcommand
}

TEST_CASE("cli: exit code 3 on numerical failure") {
  // kappa=-1 dirac2 argument reaches the hypergeometric branch point at
  // eta -> 0+ (y^2 -> 1): the evaluator refuses to continue there.
  CHECK(run_cli("dirac2 --kappa -1 --c 1 --K 0.5 --C 0 --D 1 --grid 0.001:1:50 "
                "--output cli_d2_bad.csv") == 3);
}
