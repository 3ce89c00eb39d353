#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "gausscubic/verify.hpp"

using namespace gausscubic;

TEST_CASE("slugs round-trip") {
  for (CheckKind k : all_check_kinds()) {
    auto back = kind_from_slug(kind_slug(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(kind_from_slug("nonsense") == std::nullopt);
}

TEST_CASE("individual checks") {
  CheckReport r1 = run_check(CheckKind::trivial, {.p = 3, .r = 2});
  CHECK(r1.pass);
  CHECK(r1.witnesses["lhs"] == "-1");

  CheckReport r2 = run_check(CheckKind::periodpoly, {.p = 7});
  CHECK(r2.pass);

  // the pinned beta = 6 (cube and QNR) instance over F_49
  CheckReport r3 = run_check(CheckKind::g2split, {.p = 7, .beta = 6});
  CHECK(r3.pass);
  CHECK(r3.params["field"]["steps"][0]["beta"] == 6);

  CheckReport r4 = run_check(CheckKind::coprime_doubling, {.p = 13, .s = 1, .m = 7});
  CHECK(r4.pass);
  CHECK(r4.witnesses["rhs"] == "13");

  // Lemma-style degree-3 split needs a character with nontrivial restriction;
  // the quadratic one qualifies at (7, 3, 1)
  CheckReport r5 = run_check(CheckKind::deg_split, {.p = 7, .s = 1, .r = 3, .m = 2});
  CHECK(r5.pass);

  // chain over F_7 in F_49 in F_2401
  CheckReport r6 = run_check(CheckKind::chain2k, {.p = 7, .s = 1, .k = 2});
  CHECK(r6.pass);
  CHECK(r6.params["field"]["steps"].size() == 2);

  CheckReport r7 = run_check(CheckKind::p7unit, {.p = 7});
  CHECK(r7.pass);
}

TEST_CASE("checks reject invalid instances") {
  CHECK_THROWS_AS(run_check(CheckKind::p5odd, {.p = 7, .s = 1}), Error);
  CHECK_THROWS_AS(run_check(CheckKind::periodpoly, {.p = 11}), Error);
  // m = 3 cannot restrict nontrivially from F_{p^3} to F_p
  CHECK_THROWS_AS(run_check(CheckKind::deg_split, {.p = 7, .s = 1, .r = 3, .m = 3}), Error);
}

TEST_CASE("suite on a small range") {
  SuiteConfig config;
  config.p_max = 7;
  SuiteReport rep = run_suite(config);
  CHECK(rep.fail_count == 0);
  CHECK(rep.pass_count > 10);
  // deterministic ordering: sorted by kind then params
  for (std::size_t i = 1; i < rep.checks.size(); ++i) {
    const auto &a = rep.checks[i - 1], &b = rep.checks[i];
    bool ordered = static_cast<int>(a.kind) < static_cast<int>(b.kind) ||
                   (a.kind == b.kind && a.params.dump() <= b.params.dump());
    CHECK(ordered);
  }

  nlohmann::json j = rep.to_json();
  CHECK(j["summary"]["pass"] == rep.pass_count);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["checks"].is_array());

  std::ostringstream os;
  rep.print_table(os);
  CHECK(os.str().find("summary:") != std::string::npos);
}

TEST_CASE("suite below the instance families is empty") {
  SuiteConfig config;
  config.p_max = 4;
  SuiteReport rep = run_suite(config);
  CHECK(rep.checks.empty());
  CHECK(rep.all_pass());
}

TEST_CASE("kind filter") {
  SuiteConfig config;
  config.p_max = 61;
  config.kinds = std::set<CheckKind>{CheckKind::p7unit};
  SuiteReport rep = run_suite(config);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].pass);
}

TEST_CASE("default instance list is substantial and runs in parallel") {
  SuiteConfig config;
  config.p_max = 61;
  CHECK(default_instances(config).size() >= 120);
  config.jobs = 2;
  SuiteReport rep = run_suite(config);
  CHECK(rep.fail_count == 0);
  CHECK(rep.pass_count >= 120);
}
