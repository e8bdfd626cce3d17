#include <set>
#include <string>

#include "doctest.h"
#include "multispin/verification.hpp"

using namespace multispin;

namespace {

SuiteConfig quick(std::vector<Suite> suites) {
  SuiteConfig c;
  c.suites = std::move(suites);
  c.truncation = 3;
  return c;
}

}  // namespace

TEST_CASE("momentum parsing") {
  const auto p = parse_momentum("0,3/5,-2");
  CHECK(p[1] == Rational(3, 5));
  CHECK(p[2] == -2);
  CHECK_THROWS_AS(parse_momentum("1,2"), ConfigError);
  CHECK_THROWS_AS(parse_momentum("1,2,3,4"), ConfigError);
  CHECK_THROWS_AS(parse_momentum("1,x,3"), ConfigError);
}

TEST_CASE("suite names") {
  for (Suite s : all_suites()) CHECK(parse_suite(suite_name(s)) == s);
  CHECK_THROWS_AS(parse_suite("everything"), ConfigError);
}

TEST_CASE("configuration is validated before anything runs") {
  SuiteConfig c = quick({Suite::kProjectors});
  c.mass = 1;
  c.momentum = {Rational(1), Rational(1), Rational(0)};
  CHECK_THROWS_AS(run(c), ConfigError);  // p0 irrational
  c.mass = Rational(1, 2);
  CHECK_THROWS_AS(run(c), ConfigError);  // |p| irrational
  c.suites = {Suite::kAlgebra};
  CHECK_NOTHROW(c.validate());  // |p| only matters for projectors
  c = quick({Suite::kFock});
  c.truncation = 1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = quick({});
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = quick({Suite::kEm});
  c.k0 = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = quick({Suite::kEm});
  c.mass = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("rest frame skips the spin-projection identities") {
  SuiteConfig c = quick({Suite::kProjectors});
  c.momentum = {Rational(0), Rational(0), Rational(0)};
  const VerificationReport r = run(c);
  CHECK(r.all_pass());
  CHECK(r.count(CheckStatus::kSkip) == 9);
  CHECK(r.count(CheckStatus::kFail) == 0);
  for (const auto& rec : r.records) {
    if (rec.status == CheckStatus::kSkip) CHECK(rec.reason == "rest-frame");
  }
}

TEST_CASE("report ids are unique and every check passes") {
  const VerificationReport r = run(quick(all_suites()));
  CHECK(r.all_pass());
  CHECK(r.count(CheckStatus::kPass) == r.records.size());
  std::set<std::string> ids;
  for (const auto& rec : r.records) {
    CHECK(ids.insert(rec.id).second);
    CHECK(rec.witness.is_null());
    CHECK_FALSE(rec.anchor.empty());
  }
}

TEST_CASE("injected failure flips the verdict and carries a witness") {
  SuiteConfig c = quick({Suite::kEm});
  c.inject_failure = true;
  const VerificationReport r = run(c);
  CHECK_FALSE(r.all_pass());
  CHECK(r.count(CheckStatus::kFail) == 1);
  CHECK(r.records.back().id == "injected.alpha-commute");
  CHECK(r.records.back().witness.contains("row"));
  const Json j = r.to_json(false);
  CHECK(j["summary"]["failed"] == 1);
  CHECK(r.to_text(false).find("FAIL  injected.alpha-commute") != std::string::npos);
}

TEST_CASE("JSON output is deterministic and independent of the worker count") {
  SuiteConfig c = quick({Suite::kAlgebra, Suite::kU31, Suite::kEm});
  const std::string one = run(c).to_json(false).dump();
  c.workers = 3;
  const std::string three = run(c).to_json(false).dump();
  CHECK(one == three);
  CHECK(one.find("elapsed_ms") == std::string::npos);
  CHECK(run(c).to_json(true).dump().find("elapsed_ms") != std::string::npos);
}
