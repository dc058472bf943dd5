#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles/oracles.hpp"
#include "permorbit/permutation.hpp"

using namespace permorbit;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("compose applies the left factor first") {
  auto p = parse_permutation("(1,2,3)", 3);
  auto q = parse_permutation("(1,2)", 3);
  // 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2.
  CHECK((p * q).to_string() == "(2,3)");
  CHECK((p * q).images() == oracle::compose(p.images(), q.images()));
  CHECK(p * Permutation(3) == p);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation(4)), PermutationError);
}

TEST_CASE("conjugation is s^-1 g s") {
  auto g = parse_permutation("(1,2)", 3);
  auto s = parse_permutation("(2,3)", 3);
  CHECK(conjugate(g, s).to_string() == "(1,3)");
  CHECK(conjugate(g, s) == s.inverse() * g * s);
  CHECK(conjugate(g, Permutation(3)) == g);
  CHECK(conjugate(g, g) == g);
  CHECK_THROWS_AS(conjugate(g, Permutation(2)), PermutationError);
}

TEST_CASE("conjugation composes and preserves cycle type on random pairs") {
  std::mt19937 rng(7);
  for (int i = 0; i < 10000; ++i) {
    std::size_t n = 1 + rng() % 9;
    auto g = random_perm(n, rng), s = random_perm(n, rng), t = random_perm(n, rng);
    REQUIRE(conjugate(g, s).cycle_type() == g.cycle_type());
    REQUIRE(conjugate(conjugate(g, s), t) == conjugate(g, s * t));
    REQUIRE((g * g.inverse()).is_identity());
  }
}

TEST_CASE("cycle notation round trip and identity") {
  CHECK(Permutation(5).to_string() == "()");
  CHECK(parse_permutation("()", 4).is_identity());
  auto p = parse_permutation("(1,2,3)(4,5)", 6);
  CHECK(p.to_string() == "(1,2,3)(4,5)");
  CHECK(p.order() == 6);
  CHECK(p.sign() == -1);
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 2, 1});
  CHECK(parse_permutation(" ( 3 , 1 ) ", 3).to_string() == "(1,3)");
  auto list = parse_permutation_list("(1,2,3,4),(1,3)", 4);
  REQUIRE(list.size() == 2);
  CHECK(list[1].to_string() == "(1,3)");
  CHECK(parse_permutation_list("", 4).empty());
  CHECK(to_string(list) == "(1,2,3,4),(1,3)");
}

TEST_CASE("malformed cycle strings are rejected") {
  CHECK_THROWS_AS(parse_permutation("(1,3)", 2), PermutationError);
  CHECK_THROWS_AS(parse_permutation("(1,2,1)", 3), PermutationError);
  CHECK_THROWS_AS(parse_permutation("(1,2)(2,3)", 3), PermutationError);
  CHECK_THROWS_AS(parse_permutation("(1,2", 3), PermutationError);
  CHECK_THROWS_AS(parse_permutation("1,2", 3), PermutationError);
  CHECK_THROWS_AS(parse_permutation("(0,1)", 3), PermutationError);
  CHECK_THROWS_AS(parse_permutation("(1,2)x", 3), PermutationError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), PermutationError);
}

TEST_CASE("power handles negative exponents") {
  auto p = parse_permutation("(1,2,3,4,5)", 5);
  CHECK(power(p, 5).is_identity());
  CHECK(power(p, -1) == p.inverse());
  CHECK(power(p, 7) == p * p);
  CHECK(commutator(p, p).is_identity());
}
