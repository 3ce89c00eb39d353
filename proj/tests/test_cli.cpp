// End-to-end tests of the command-line surface: flags, exit codes, JSON and
// CSV output.  The binary path comes from the GAUSSCUBIC_BIN environment
// variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("GAUSSCUBIC_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = env + " " + std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("gauss subcommand") {
  RunResult triv = run_cli("gauss --p 7 --m 1 --format json");
  CHECK(triv.exit_code == 0);
  auto j = nlohmann::json::parse(triv.out);
  CHECK(j["rational"] == "-1");

  RunResult g25 = run_cli("gauss --p 5 --ext 2:auto:qnr --m 3 --format json");
  CHECK(g25.exit_code == 0);
  auto j25 = nlohmann::json::parse(g25.out);
  CHECK(j25["rational"] == "5");

  RunResult g7 = run_cli("gauss --p 7 --m 3 --gen 5 --format json");
  CHECK(g7.exit_code == 0);
  auto j7 = nlohmann::json::parse(g7.out);
  CHECK(j7["abs2"] == "7");
  CHECK(j7["g"] == 5);
  CHECK(j7["value"]["m"] == 3);

  // determinism: identical bytes on a second run
  CHECK(run_cli("gauss --p 7 --m 3 --gen 5 --format json").out == g7.out);

  // re-evaluating from the recorded parameters reproduces the record
  long long beta_rec = j25["field"]["steps"][0]["beta"].get<long long>();
  long long g_rec = j25["g"].get<long long>();
  RunResult replay = run_cli("gauss --p 5 --ext 2:" + std::to_string(beta_rec) +
                             " --m 3 --gen " + std::to_string(g_rec) + " --format json");
  CHECK(nlohmann::json::parse(replay.out)["value"] == j25["value"]);

  CHECK(run_cli("gauss --p 6 --m 1").exit_code == 2);
  CHECK(run_cli("gauss --p 5 --m 3").exit_code == 2);          // order does not divide
  CHECK(run_cli("gauss --p 7 --ext 2:4 --m 3").exit_code == 2);  // reducible binomial
  CHECK(run_cli("gauss").exit_code == 2);                       // missing --p
}

TEST_CASE("size cap from the environment") {
  RunResult capped = run_cli("gauss --p 7 --ext 2:3 --m 3", "GAUSS_SIZE_CAP=40");
  CHECK(capped.exit_code == 3);
  RunResult bad = run_cli("gauss --p 7 --m 1", "GAUSS_SIZE_CAP=banana");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("periodpoly subcommand") {
  RunResult r = run_cli("periodpoly --p 7 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["q_coeffs"] == nlohmann::json({-1, -2, 1, 1}));
  CHECK(j["u"] == 1);
  CHECK(j["v_abs"] == 1);
  CHECK(j["v_plus"]["a"] == 1);
  CHECK(j["v_plus"]["b"] == 0);
  CHECK(j["v_plus"]["c"] == 1);

  RunResult r13 = run_cli("periodpoly --p 13 --format json");
  CHECK(nlohmann::json::parse(r13.out)["q_coeffs"] == nlohmann::json({1, -4, 1, 1}));

  CHECK(run_cli("periodpoly --p 11").exit_code == 2);
}

TEST_CASE("repr subcommand") {
  RunResult r = run_cli("repr --p 19 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["x2_plus_3y2"] == nlohmann::json({4, 1}));
  CHECK(j["u2_plus_27v2"] == nlohmann::json({7, 1}));
  CHECK(run_cli("repr --p 10").exit_code == 2);
}

TEST_CASE("verify subcommand") {
  RunResult small = run_cli("verify --pmax 7 --format json --jobs 2");
  CHECK(small.exit_code == 0);
  auto j = nlohmann::json::parse(small.out);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["pass"].get<int>() > 0);

  CHECK(run_cli("verify --pmax 4").exit_code == 0);
  CHECK(run_cli("verify --kinds p7unit").exit_code == 0);
  CHECK(run_cli("verify --kinds not-a-kind").exit_code == 2);

  // --out writes the same report to a file
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/gausscubic_suite.json";
  RunResult to_file = run_cli("verify --pmax 7 --format json --out " + path);
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  FILE* fp = std::fopen(path.c_str(), "r");
  REQUIRE(fp != nullptr);
  std::string contents;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), fp)) contents.append(buf, n);
  std::fclose(fp);
  std::remove(path.c_str());
  CHECK(nlohmann::json::parse(contents)["summary"]["fail"] == 0);
}

TEST_CASE("table subcommand") {
  RunResult r = run_cli("table --pmax 100");
  CHECK(r.exit_code == 0);
  auto rows = lines_of(r.out);
  REQUIRE(!rows.empty());
  CHECK(rows[0] == "p,u,v,c0,c1,c2,c3,a,b,c");
  CHECK(rows.size() == 12);  // header + the 11 primes = 1 (mod 6) up to 100
  CHECK(rows[1] == "7,1,1,-1,-2,1,1,1,0,1");

  RunResult empty = run_cli("table --pmax 6");
  CHECK(lines_of(empty.out).size() == 1);  // header only

  RunResult js = run_cli("table --pmax 20 --out json");
  auto j = nlohmann::json::parse(js.out);
  CHECK(j.size() == 3);  // 7, 13, 19
  CHECK(j[0]["p"] == 7);

  CHECK(run_cli("table --pmax -3").exit_code == 2);
}
