#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles/oracles.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/perm_group.hpp"

using namespace permorbit;

namespace {

std::vector<oracle::Images> raw(const std::vector<Permutation>& gens) {
  std::vector<oracle::Images> out;
  for (const auto& g : gens) out.push_back(oracle::Images(g.images().begin(), g.images().end()));
  return out;
}

PermutationGroup d8() { return PermutationGroup(4, parse_permutation_list("(1,2,3,4),(1,3)", 4)); }

}  // namespace

TEST_CASE("orders from the stabilizer chain") {
  CHECK(d8().order() == 8);
  CHECK(PermutationGroup(5, {}).order() == 1);
  CHECK(alternating_natural(5).order() == 60);
  CHECK(oracle::closure(5, raw(alternating_natural(5).generators())).size() == 60);
  CHECK(symmetric_natural(7).order() == 5040);
}

TEST_CASE("chain invariants hold") {
  auto g = alternating_natural(6);
  const auto& chain = g.chain();
  mpz_class product = 1;
  for (const auto& level : chain.levels()) {
    product *= static_cast<unsigned long>(level.orbit.size());
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
      CHECK(level.transversal[i][level.base_point] == level.orbit[i]);
    }
  }
  CHECK(product == 360);
  for (const auto& s : g.generators()) CHECK(g.contains(s));
  // Base selection is deterministic: smallest moved point first.
  CHECK(chain.base().front() == 0);
}

TEST_CASE("membership") {
  CHECK(d8().contains(parse_permutation("(1,3)(2,4)", 4)));
  CHECK_FALSE(d8().contains(parse_permutation("(1,2)", 4)));
  CHECK_FALSE(alternating_natural(5).contains(parse_permutation("(1,2)", 5)));
  CHECK(alternating_natural(5).contains(parse_permutation("(1,2)(3,4)", 5)));
}

TEST_CASE("elements enumerate the group exactly once") {
  auto elems = symmetric_natural(4).elements();
  CHECK(elems.size() == 24);
  std::sort(elems.begin(), elems.end());
  CHECK(std::adjacent_find(elems.begin(), elems.end()) == elems.end());
  CHECK_THROWS_AS(symmetric_natural(7).elements(100), CapExceeded);
}

TEST_CASE("orbits, transitivity and regularity") {
  auto z4 = cyclic_regular(4);
  CHECK(z4.is_transitive());
  CHECK(z4.is_regular());
  CHECK(d8().is_transitive());
  CHECK_FALSE(d8().is_regular());
  PermutationGroup t(4, {parse_permutation("(1,2)", 4)});
  CHECK(t.orbit(0).size() == 2);
  CHECK_FALSE(t.is_transitive());
  CHECK_THROWS_AS(t.orbit(4), PermutationError);
  auto s3 = FiniteGroup::from_permutations(3, symmetric_natural(3).generators());
  CHECK(regular_representation(s3).order() == 6);
  CHECK(regular_representation(s3).is_regular());
}

TEST_CASE("point stabilizers") {
  CHECK(point_stabilizer(cyclic_regular(5), 0).group.order() == 1);
  CHECK(point_stabilizer(d8(), 0).group.order() == 2);
  auto a5 = alternating_natural(5);
  auto st = point_stabilizer(a5, 4).group;
  CHECK(st.order() == 12);
  for (const auto& x : a5.elements()) {
    CHECK(st.contains(x) == (x[4] == 4));
  }
}

TEST_CASE("core-freeness") {
  auto s4 = symmetric_natural(4);
  CHECK(core_is_trivial(s4, point_stabilizer(s4, 0)));
  CHECK_FALSE(core_is_trivial(s4, SubgroupHandle{s4, s4}));
  auto v4 = make_subgroup(s4, parse_permutation_list("(1,2)(3,4),(1,3)(2,4)", 4));
  CHECK_FALSE(core_is_trivial(s4, v4));
  // Oracle: intersect all conjugates explicitly.
  auto h = point_stabilizer(s4, 0).group;
  std::size_t in_core = 0;
  auto all = s4.elements();
  for (const auto& x : h.elements()) {
    bool everywhere = std::all_of(all.begin(), all.end(), [&](const Permutation& g) {
      return h.contains(conjugate(x, g.inverse()));
    });
    if (everywhere) ++in_core;
  }
  CHECK(in_core == 1);
}

TEST_CASE("classes and transporters") {
  auto classes = conjugacy_classes(symmetric_natural(3));
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});

  auto a5 = alternating_natural(5);
  auto s0 = point_stabilizer(a5, 0).group;
  for (Point p = 1; p < 5; ++p) {
    auto sp = point_stabilizer(a5, p).group;
    auto t = subgroup_transporter(a5, s0, sp);
    REQUIRE(t.has_value());
    CHECK((*t)[0] == p);
  }
  auto self = subgroup_transporter(a5, s0, s0);
  CHECK(self.has_value());
  auto c3 = make_subgroup(a5, {parse_permutation("(1,2,3)", 5)}).group;
  CHECK_FALSE(subgroup_transporter(a5, c3, s0).has_value());
}

TEST_CASE("derived series, centre, exponent") {
  auto a5 = alternating_natural(5);
  CHECK_FALSE(is_soluble(a5));
  CHECK(centre(a5).group.order() == 1);
  CHECK(derived_subgroup(a5).group.order() == 60);
  CHECK(is_soluble(d8()));
  CHECK(centre(d8()).group.order() == 2);
  CHECK(derived_subgroup(d8()).group.order() == 2);
  CHECK(derived_subgroup(cyclic_regular(6)).group.order() == 1);
  CHECK(exponent(d8()) == 4);
  CHECK(derived_series(symmetric_natural(4)).size() == 4);
}

TEST_CASE("orbit and class lengths divide the order") {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto g = dihedral_natural(n);
    auto order = g.order_u64();
    for (const auto& o : g.orbits()) CHECK(order % o.size() == 0);
    for (const auto& c : conjugacy_classes(g)) CHECK(order % c.size() == 0);
  }
}

TEST_CASE("stabilizer chain order matches the closure oracle on random subgroups") {
  std::mt19937 rng(20240601);
  int checked = 0;
  while (checked < 200) {
    std::size_t n = 2 + rng() % 6;
    std::size_t k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Point> images(n);
      std::iota(images.begin(), images.end(), Point{0});
      // Random products of a few transpositions keep many groups small.
      std::size_t swaps = 1 + rng() % 3;
      for (std::size_t s = 0; s < swaps; ++s) std::swap(images[rng() % n], images[rng() % n]);
      gens.emplace_back(std::move(images));
    }
    PermutationGroup g(n, gens);
    if (g.order() > 5000) continue;
    auto closure = oracle::closure(n, raw(gens));
    REQUIRE(g.order() == static_cast<unsigned long>(closure.size()));
    ++checked;
  }
}
