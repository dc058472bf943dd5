#include <doctest.h>

#include "permorbit/report.hpp"

using namespace permorbit;

TEST_CASE("report status") {
  VerificationReport r("demo");
  CHECK(r.status() == Status::pass);
  r.expect_equal("same", 3, 3);
  CHECK(r.status() == Status::pass);
  r.expect_true("ok", false, "broken");
  CHECK(r.status() == Status::fail);
  CHECK_FALSE(r.passed());
  // A failure without an explicit witness records the computed value.
  CHECK(r.checks().back().witness == nlohmann::json{{"computed", false}});

  VerificationReport skipped("skips");
  CheckResult c;
  c.name = "later";
  c.status = Status::skipped;
  skipped.add(c);
  CHECK(skipped.status() == Status::skipped);
  CHECK(skipped.passed());
}

TEST_CASE("report json round trip") {
  VerificationReport r("round trip");
  r.expect_equal("row 1", 48, 48, "detail");
  r.expect_equal("list", std::vector<int>{1, 2}, std::vector<int>{1, 3});
  r.set_seconds(1.5);
  auto j = r.to_json();
  CHECK(j["status"] == "fail");
  CHECK(j["schema_version"] == VerificationReport::kSchemaVersion);
  auto back = VerificationReport::from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.name() == r.name());
  CHECK(back.checks() == r.checks());
  CHECK(back.seconds() == r.seconds());
  CHECK(back.to_json() == j);
  CHECK_THROWS_AS(VerificationReport::from_json({{"schema_version", 99}}), std::invalid_argument);
  CHECK_THROWS_AS(status_from_string("maybe"), std::invalid_argument);
}

TEST_CASE("report text") {
  VerificationReport r("t");
  r.expect_equal("row 11", 72, 72);
  auto text = r.to_text();
  CHECK(text.find("[pass]    row 11: expected 72, computed 72") != std::string::npos);
  CHECK(text.find("pass: 1 checks") != std::string::npos);
}
