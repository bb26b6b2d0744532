#include <doctest.h>

#include "cremona/verify.hpp"

using namespace cremona;

namespace {

RunConfig quick() {
  RunConfig cfg;
  cfg.recheck_prime = 0;
  cfg.deterministic = true;
  return cfg;
}

int count_status(const Report& r, CheckStatus s) {
  int n = 0;
  for (const auto& c : r.checks) n += c.status == s;
  return n;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("Todd-Room manifest passes") {
    const auto inst = build_example("todd_room", 101);
    const auto report = verify_manifest(inst, quick());
    CHECK(report.pass());
    CHECK(report.exit_code() == 0);
    CHECK(report.checks.size() == inst.manifest.checks.size());
    // manifest order is kept
    for (std::size_t i = 0; i < report.checks.size(); ++i)
      CHECK(report.checks[i].spec.name == inst.manifest.checks[i].name);
  }

  TEST_CASE("a wrong expected value fails exactly one check") {
    auto inst = build_example("todd_room", 101);
    bool changed = false;
    for (auto& c : inst.manifest.checks)
      if (c.op == "liaison") {
        c.expected = c.expected.get<long long>() + 1;
        changed = true;
        break;
      }
    REQUIRE(changed);
    const auto report = verify_manifest(inst, quick());
    CHECK_FALSE(report.pass());
    CHECK(report.exit_code() == 1);
    CHECK(count_status(report, CheckStatus::Fail) == 1);
  }

  TEST_CASE("a starved Groebner budget gives unknown, not failure") {
    const auto inst = build_example("todd_room", 101);
    auto cfg = quick();
    cfg.gb_pair_budget = 1;
    const auto report = verify_manifest(inst, cfg);
    CHECK(count_status(report, CheckStatus::Fail) == 0);
    CHECK(count_status(report, CheckStatus::Unknown) > 0);
    CHECK(report.exit_code() == 2);
    CHECK_FALSE(report.to_json()["pass"].get<bool>());
  }

  TEST_CASE("degenerate matrix is caught") {
    const Ring ring{101, 3, MonoOrder::Grevlex};
    const auto inst = matrix_example("fat_point", matrix_from_text(ring, {{"x0", "0"}, {"x1", "x0"}, {"0", "x1"}}));
    const auto report = verify_manifest(inst, quick());
    CHECK(report.exit_code() == 1);
    bool witnessed = false;
    for (const auto& c : report.checks)
      if (c.actual == "SingularAt") witnessed = c.note.find("(0:0:1)") != std::string::npos;
    CHECK(witnessed);
  }

  TEST_CASE("reports are deterministic and follow the schema") {
    const auto inst = build_example("segre_p5", 101);
    auto cfg = quick();
    cfg.recheck_prime = 32003;
    const auto a = verify_manifest(inst, cfg).to_json().dump();
    const auto b = verify_manifest(build_example("segre_p5", 101), cfg).to_json().dump();
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    for (const char* key : {"example", "prime", "seed", "checks", "pass"}) CHECK(j.contains(key));
    bool rechecked = false;
    for (const auto& c : j["checks"]) {
      for (const char* key : {"name", "expected", "actual", "pass", "provenance", "anchor", "millis"})
        CHECK(c.contains(key));
      CHECK(c["millis"] == 0);
      const auto prov = c["provenance"].get<std::string>();
      CHECK((prov == "PAPER" || prov == "DERIVED" || prov == "TRIVIAL"));
      if (prov == "PAPER") CHECK_FALSE(c["anchor"].get<std::string>().empty());
      rechecked = rechecked || c.contains("recheck");
    }
    CHECK(rechecked);
  }

  TEST_CASE("run configuration is validated") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.prime = 100;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = RunConfig{};
    cfg.gb_pair_budget = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = RunConfig{};
    cfg.enumeration_budget = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
  }

  TEST_CASE("unknown operations fail the check") {
    auto inst = build_example("todd_room", 101);
    CheckSpec bogus;
    bogus.name = "bogus";
    bogus.op = "no_such_op";
    bogus.expected = 1;
    const auto r = run_check(inst, bogus, quick());
    CHECK(r.status == CheckStatus::Fail);
    CHECK_FALSE(check_ops().empty());
    CHECK(is_arithmetic_op("liaison"));
    CHECK_FALSE(is_arithmetic_op("fiber"));
  }
}
