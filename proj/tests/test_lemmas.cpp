#include <doctest.h>

#include "permorbit/lemmas.hpp"
#include "permorbit/selftest.hpp"

using namespace permorbit;

namespace {

lemmas::LemmaOptions small() {
  lemmas::LemmaOptions o;
  o.max_transitive_degree = 5;
  o.max_regular_order = 12;
  o.max_centraliser_order = 32;
  o.max_exponent_p2 = 6;
  o.max_exponent_p3 = 4;
  return o;
}

}  // namespace

TEST_CASE("lemma suites pass on a reduced range") {
  auto r = lemmas::run_all(small());
  CHECK(r.status() == Status::pass);
  CHECK(r.checks().size() == 5 + 1 + 1 + 2 + 4);
}

TEST_CASE("adapted-basis sweep counts every subspace") {
  auto o = small();
  o.max_exponent_p2 = 3;
  o.max_exponent_p3 = 2;
  auto r = lemmas::check_adapted_bases(o);
  REQUIRE(r.checks().size() == 2);
  // Subspaces of GF(2)^r for r = 1, 2, 3 summed over the partitions of
  // 1, 2, 3: (2) + (2, 5) + (2, 5, 16) = 32; for p = 3: (2) + (2, 6) = 10.
  CHECK(r.checks()[0].detail.starts_with("32 subgroups; 6 groups exhaustive"));
  CHECK(r.checks()[1].detail.starts_with("10 subgroups; 3 groups exhaustive"));
}

TEST_CASE("sampling above the exhaustive limit") {
  auto o = small();
  o.exhaustive_limit = 5;
  o.sample_size = 50;
  auto r = lemmas::check_adapted_bases(o);
  CHECK(r.status() == Status::pass);
  CHECK(r.checks()[0].detail.find("sampled") != std::string::npos);
}

TEST_CASE("serial and parallel sweeps agree") {
  auto o = small();
  auto parallel = lemmas::check_adapted_bases(o);
  o.parallel = false;
  auto serial = lemmas::check_adapted_bases(o);
  REQUIRE(serial.checks().size() == parallel.checks().size());
  for (std::size_t i = 0; i < serial.checks().size(); ++i) {
    CHECK(serial.checks()[i].detail == parallel.checks()[i].detail);
    CHECK(serial.checks()[i].status == parallel.checks()[i].status);
  }
}

TEST_CASE("worked examples") {
  auto r = selftest::run();
  for (const auto& c : r.checks()) {
    CAPTURE(c.name);
    CHECK(c.status == Status::pass);
  }
  CHECK(r.checks().size() >= 40);
}
