#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles/oracles.hpp"
#include "permorbit/automorphisms.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/kernels.hpp"
#include "permorbit/small_groups.hpp"

using namespace permorbit;

namespace {

FiniteGroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

oracle::Table table_of(const FiniteGroup& g) {
  oracle::Table t{g.order(), {}};
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) t.mul.push_back(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
  }
  return t;
}

PermutationGroup d8() { return PermutationGroup(4, parse_permutation_list("(1,2,3,4),(1,3)", 4)); }
FiniteGroupPtr s3() { return symmetric_natural(3).finite(); }

AutOptions big_cap() {
  AutOptions o;
  o.aut_cap = kHardAutCap;
  return o;
}

}  // namespace

TEST_CASE("rank of small groups") {
  CHECK(min_generating_tuple(abelian_group({6})).rank == 1);
  CHECK(min_generating_tuple(abelian_group({2, 2})).rank == 2);
  auto z3a5 = direct_product(abelian_group({3}), *alternating_natural(5).finite());
  auto t = min_generating_tuple(z3a5);
  CHECK(t.rank == 2);
  CHECK(z3a5.closure(t.tuple).size() == 180);
  CHECK(min_generating_tuple(FiniteGroup::from_permutations(1, {})).rank == 0);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(share(abelian_group({8}))).size() == 4);
  auto aut_s3 = automorphism_group(s3());
  CHECK(aut_s3.size() == 6);
  CHECK(aut_s3 == inner_automorphisms(s3()));
  auto v4 = share(abelian_group({2, 2}));
  CHECK(automorphism_group(v4).size() == 6);
  CHECK(oracle::count_automorphisms(table_of(*v4)) == 6);
  CHECK(automorphism_group(alternating_natural(5)).size() == 120);
}

TEST_CASE("automorphism counts agree with the brute-force oracle up to order 16") {
  for (const auto& [name, g] : small_group_catalog(16)) {
    CAPTURE(name);
    CHECK(automorphism_group(g, big_cap()).size() == oracle::count_automorphisms(table_of(*g)));
  }
}

TEST_CASE("every computed automorphism passes the full product check") {
  for (const auto& [name, g] : small_group_catalog(24)) {
    CAPTURE(name);
    auto aut = automorphism_group(g, big_cap());
    CHECK(aut.contains_identity());
    bool all = true;
    for (const auto& m : aut.maps()) {
      all = all && respects_all_products(*g, *g, m) && is_bijection(m, g->order());
    }
    CHECK(all);
    if (aut.size() <= 200) CHECK(aut.is_closed());
  }
}

TEST_CASE("serial and parallel automorphism searches agree") {
  for (const auto& [name, g] : small_group_catalog(24)) {
    CAPTURE(name);
    AutOptions serial = big_cap();
    serial.parallel = false;
    CHECK(automorphism_group(g, serial) == automorphism_group(g, big_cap()));
  }
}

TEST_CASE("automorphism caps") {
  AutOptions o;
  o.order_cap = 10;
  CHECK_THROWS_AS(automorphism_group(share(abelian_group({12})), o), CapExceeded);
  AutOptions small;
  small.aut_cap = 100;
  CHECK_THROWS_AS(automorphism_group(share(abelian_group({2, 2, 2, 2}))), CapExceeded);
  CHECK_THROWS_AS(automorphism_group(share(abelian_group({2, 2, 2})), small), CapExceeded);
  CHECK(automorphism_group(share(abelian_group({2, 2, 2, 2})), big_cap()).size() == 20160);
}

TEST_CASE("semiregular action on a generating tuple") {
  for (const auto& [name, g] : small_group_catalog(24)) {
    CAPTURE(name);
    auto aut = automorphism_group(g, big_cap());
    auto t = min_generating_tuple(*g).tuple;
    std::set<std::vector<Elem>> images;
    for (const auto& m : aut.maps()) {
      std::vector<Elem> img;
      for (Elem x : t) img.push_back(m[x]);
      images.insert(img);
    }
    CHECK(images.size() == aut.size());
  }
}

TEST_CASE("inner automorphisms") {
  CHECK(inner_automorphisms(share(abelian_group({4, 2}))).size() == 1);
  CHECK(inner_automorphisms(s3()).size() == 6);
  CHECK(inner_automorphisms(d8().finite()).size() == 4);
  for (const auto& [name, g] : small_group_catalog(24)) {
    CAPTURE(name);
    auto inn = inner_automorphisms(g);
    CHECK(inn.size() * g->centre().size() == g->order());
    CHECK(inn.is_subset_of(automorphism_group(g, big_cap())));
  }
}

TEST_CASE("central automorphisms") {
  CHECK(central_automorphisms(s3()).size() == 1);
  auto g = d8().finite();
  CHECK(central_homomorphisms(*g).size() == 4);
  CHECK(central_automorphisms(g).size() == 4);
  for (const auto& [name, h] : small_group_catalog(24)) {
    CAPTURE(name);
    auto homs = central_homomorphisms(*h);
    for (const auto& f : homs) {
      CHECK(respects_all_products(*h, *h, f));
      CHECK(std::all_of(f.begin(), f.end(), [&](Elem x) {
        return std::binary_search(h->centre().begin(), h->centre().end(), x);
      }));
    }
    auto cent = central_automorphisms(h);
    CHECK(cent.is_subset_of(automorphism_group(h, big_cap())));
  }
}

TEST_CASE("power map automorphisms") {
  CHECK(power_map_exponents(abelian_group({5})) == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(power_map_exponents(abelian_group({4, 2})) == std::vector<std::uint64_t>{1, 3});
  CHECK(power_map_exponents(*s3()) == std::vector<std::uint64_t>{1});
  for (const auto& [name, g] : small_group_catalog(24)) {
    if (!g->is_abelian()) continue;
    CAPTURE(name);
    CHECK(power_map_automorphisms(g).size() == oracle::totient(g->exponent()));
  }
}

TEST_CASE("automorphisms preserving the point stabilizer class") {
  auto a5 = alternating_natural(5);
  CHECK(aut_perm(a5).size() == 120);
  CHECK(maol_perm(a5) == 24);
  CHECK(maol_perm(d8()) == 2);
  CHECK(maol_perm(cyclic_regular(2)) == 1);
  CHECK(maol_perm(cyclic_regular(1)) == 1);
  CHECK_THROWS_AS(aut_perm(PermutationGroup(4, parse_permutation_list("(1,2)", 4))), std::invalid_argument);
}

TEST_CASE("regular groups: every automorphism preserves the stabilizer class") {
  for (const auto& [name, g] : small_group_catalog(24)) {
    CAPTURE(name);
    auto reg = regular_representation(*g);
    auto full = automorphism_group(reg.finite(), big_cap());
    CHECK(aut_perm(reg, full).size() == full.size());
  }
}

TEST_CASE("normaliser scans") {
  auto g = d8();
  auto normaliser = normaliser_in_symmetric_group(g);
  CHECK(normaliser.size() == 8);
  auto induced = aut_perm_via_normaliser(g);
  CHECK(induced.size() == 4);
  CHECK(induced == aut_perm(g));
  CHECK(aut_perm_via_normaliser(cyclic_regular(3)).size() == 2);
  for (std::size_t n = 3; n <= 6; ++n) {
    auto s = symmetric_natural(n);
    CHECK(aut_perm_via_normaliser(s) == inner_automorphisms(s.finite()));
  }
  CHECK_THROWS_AS(normaliser_in_symmetric_group(cyclic_regular(9)), CapExceeded);
}

TEST_CASE("serial and parallel normaliser scans agree") {
  std::vector<PermutationGroup> groups{d8(), alternating_natural(5), cyclic_regular(6),
                                       PermutationGroup(6, parse_permutation_list("(1,2,3)(4,5,6),(1,4)", 6))};
  for (const auto& g : groups) {
    CHECK(kernels::normaliser_scan_serial(*g.finite(), g.generators()) ==
          kernels::normaliser_scan_parallel(*g.finite(), g.generators()));
  }
}

TEST_CASE("unranking matches lexicographic order") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Point> s(n);
    std::iota(s.begin(), s.end(), Point{0});
    for (std::uint64_t r = 0; r < kernels::factorial(n); ++r) {
      CHECK(kernels::unrank_permutation(n, r).images() == s);
      std::next_permutation(s.begin(), s.end());
    }
  }
}

TEST_CASE("aut_perm agrees with the normaliser on small transitive groups") {
  std::vector<PermutationGroup> groups{d8(), cyclic_regular(4), abelian_regular({2, 2}),
                                       alternating_natural(4), symmetric_natural(4), dihedral_natural(5),
                                       alternating_natural(5), dihedral_natural(6), cyclic_regular(6)};
  for (const auto& g : groups) {
    CHECK(aut_perm(g) == aut_perm_via_normaliser(g));
    CHECK(inner_automorphisms(g.finite()).is_subset_of(aut_perm(g)));
  }
}

TEST_CASE("orbit statistics") {
  for (const auto& [name, g] : small_group_catalog(24)) {
    CAPTURE(name);
    auto aut = automorphism_group(g, big_cap());
    CHECK(kernels::orbit_lengths_serial(aut.maps(), g->order()) ==
          kernels::orbit_lengths_parallel(aut.maps(), g->order()));
    auto multiset = orbit_length_multiset(aut);
    std::size_t covered = 0;
    for (auto [len, count] : multiset) covered += std::size_t(len) * count;
    CHECK(covered == g->order());
    CHECK(multiset.begin()->first == 1);
    auto reg = regular_representation(*g);
    CHECK(maol_perm(reg, big_cap()) == maol(g, big_cap()));
    CHECK(maol(g, big_cap()) >= g->max_class_size());
  }
  CHECK(orbit_length_multiset(automorphism_group(alternating_natural(5))) ==
        std::map<std::uint32_t, std::uint32_t>{{1, 1}, {15, 1}, {20, 1}, {24, 1}});
}

TEST_CASE("maol_perm is bounded by maol and the largest class") {
  std::vector<PermutationGroup> groups{d8(), alternating_natural(4), symmetric_natural(4), dihedral_natural(5),
                                       alternating_natural(5), PermutationGroup(6, parse_permutation_list(
                                                                                   "(1,2,3)(4,5,6),(1,4)", 6))};
  for (const auto& g : groups) {
    CHECK(maol_perm(g) <= maol(g.finite()));
    CHECK(maol_perm(g) >= g.finite()->max_class_size());
  }
}

TEST_CASE("isomorphism search and automorphisms fixing a subset") {
  auto reg = regular_representation(*s3());
  CHECK(find_isomorphism(*s3(), *reg.finite()).has_value());
  CHECK_FALSE(find_isomorphism(abelian_group({6}), *s3()).has_value());
  auto z4 = share(abelian_group({4}));
  auto z2 = z4->closure({z4->power(1, 2)});
  auto witness = find_automorphism_fixing(z4, z2);
  REQUIRE(witness.has_value());
  CHECK(witness->is_automorphism());
  CHECK_FALSE(find_automorphism_fixing(z4, {1}).has_value());
}

TEST_CASE("standard tuples of abelian groups") {
  for (const auto& [name, g] : small_group_catalog(24)) {
    if (!g->is_abelian()) continue;
    CAPTURE(name);
    auto t = standard_generating_tuple(*g);
    CHECK(t.size() == min_generating_tuple(*g).rank);
    CHECK(is_standard_generating_tuple(*g, t));
    CHECK(g->closure(t).size() == g->order());
    auto pac = pac_tuple(*g, t);
    CHECK(std::all_of(pac.commutators.begin(), pac.commutators.end(), [](Elem x) { return x == 0; }));
    for (const auto& c : pac.conjugations) CHECK(c == g->derived_subgroup());
  }
  auto z42 = abelian_group({4, 2});
  // An element of order 2 first breaks the descending order condition.
  Elem a = 0, b = 0;
  for (Elem x = 1; x < 8; ++x) {
    if (z42.element_order(x) == 4 && a == 0) a = x;
  }
  for (Elem x = 1; x < 8; ++x) {
    if (z42.element_order(x) == 2 && z42.closure({a, x}).size() == 8) b = x;
  }
  CHECK(is_standard_generating_tuple(z42, {a, b}));
  CHECK(is_standard_generating_tuple(z42, {z42.mul(a, b), b}));
  CHECK_FALSE(is_standard_generating_tuple(z42, {b, a}));
  CHECK_THROWS_AS(standard_generating_tuple(*s3()), std::invalid_argument);
}

TEST_CASE("equivalent standard tuples are related by an automorphism centralising G'") {
  auto check = [](const FiniteGroupPtr& g) {
    const std::size_t d = min_generating_tuple(g->quotient(g->derived_subgroup())).rank;
    std::vector<std::vector<Elem>> tuples{{}};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<std::vector<Elem>> next;
      for (const auto& t : tuples) {
        for (std::size_t x = 0; x < g->order(); ++x) {
          auto u = t;
          u.push_back(static_cast<Elem>(x));
          next.push_back(std::move(u));
        }
      }
      tuples = std::move(next);
    }
    std::map<PacTuple, std::vector<std::vector<Elem>>> classes;
    for (const auto& t : tuples) {
      if (is_standard_tuple(*g, t)) classes[pac_tuple(*g, t)].push_back(t);
    }
    auto aut = automorphism_group(g, big_cap());
    std::vector<std::vector<Elem>> centralising;
    for (const auto& m : aut.maps()) {
      if (std::all_of(g->derived_subgroup().begin(), g->derived_subgroup().end(), [&](Elem z) { return m[z] == z; })) {
        centralising.push_back(m);
      }
    }
    bool ok = !classes.empty();
    for (const auto& [pac, members] : classes) {
      const auto& t1 = members.front();
      for (const auto& t2 : members) {
        bool found = std::any_of(centralising.begin(), centralising.end(), [&](const auto& m) {
          for (std::size_t i = 0; i < t1.size(); ++i) {
            if (m[t1[i]] != t2[i]) return false;
          }
          return true;
        });
        ok = ok && found;
      }
    }
    return ok;
  };
  auto g = d8().finite();
  CHECK(check(g));
  for (const auto& [name, h] : small_group_catalog(16)) {
    CAPTURE(name);
    CHECK(check(h));
  }
  CHECK_THROWS_AS(pac_tuple(*g, {0}), std::invalid_argument);
}
