#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "permorbit/automorphisms.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/gn.hpp"

using namespace permorbit;
using gn::GnElement;
using gn::GnGroup;

namespace {

GnElement comm(const GnGroup& g, GnElement u, GnElement v) {
  return g.multiply(g.multiply(g.inverse(u), g.inverse(v)), g.multiply(u, v));
}

}  // namespace

TEST_CASE("orders of G_n") {
  CHECK(GnGroup(1).order() == 32);
  CHECK(GnGroup(2).order() == 128);
  CHECK(GnGroup(3).order() == 2048);
  for (unsigned n = 1; n <= 3; ++n) {
    GnGroup g(n);
    CHECK(g.closure(g.generators()).size() == g.order());
    CHECK(g.finite()->order() == g.order());
  }
  CHECK_THROWS_AS(GnGroup(0), std::out_of_range);
  CHECK_THROWS_AS(GnGroup(4), std::out_of_range);
}

TEST_CASE("defining relations hold") {
  for (unsigned n = 1; n <= 3; ++n) {
    CAPTURE(n);
    GnGroup g(n);
    const unsigned k = g.k();
    GnElement u = g.x(2);
    CHECK(g.multiply(u, GnGroup::identity()) == u);
    CHECK(g.multiply(g.x(1), g.x(1)) == g.b());
    CHECK(g.multiply(g.x(k), g.x(k)) == g.b());
    for (unsigned i = 2; i < k; ++i) CHECK(g.multiply(g.x(i), g.x(i)) == 0);
    CHECK(g.multiply(g.a(), g.a()) == 0);
    CHECK(g.multiply(g.b(), g.b()) == 0);
    CHECK(comm(g, g.a(), g.b()) == 0);
    for (unsigned i = 1; i <= k; ++i) {
      CHECK(comm(g, g.x(i), g.a()) == 0);
      CHECK(comm(g, g.x(i), g.b()) == 0);
      for (unsigned j = i + 1; j <= k; ++j) {
        GnElement expected = 0;
        if (j == i + 1) expected = i % 2 == 1 ? g.a() : g.b();
        CHECK(comm(g, g.x(i), g.x(j)) == expected);
      }
    }
  }
  GnGroup g1(1);
  CHECK(g1.multiply(g1.x(2), g1.x(1)) == g1.multiply(g1.multiply(g1.x(1), g1.x(2)), g1.a()));
}

TEST_CASE("G_1 is associative with inverses") {
  GnGroup g(1);
  bool ok = true;
  for (GnElement u = 0; u < g.order(); ++u) {
    ok = ok && g.multiply(u, g.inverse(u)) == 0 && g.multiply(g.inverse(u), u) == 0;
    for (GnElement v = 0; v < g.order(); ++v) {
      for (GnElement w = 0; w < g.order(); ++w) {
        ok = ok && g.multiply(g.multiply(u, v), w) == g.multiply(u, g.multiply(v, w));
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("G_2 and G_3 are associative on random triples") {
  std::mt19937 rng(7);
  for (unsigned n = 2; n <= 3; ++n) {
    GnGroup g(n);
    std::uniform_int_distribution<GnElement> pick(0, g.order() - 1);
    bool ok = true;
    for (int trial = 0; trial < 1'000'000; ++trial) {
      GnElement u = pick(rng), v = pick(rng), w = pick(rng);
      ok = ok && g.multiply(g.multiply(u, v), w) == g.multiply(u, g.multiply(v, w));
      ok = ok && g.multiply(u, g.inverse(u)) == 0;
    }
    CHECK(ok);
  }
}

TEST_CASE("centre and derived subgroup are <a, b>") {
  for (unsigned n = 1; n <= 3; ++n) {
    GnGroup g(n);
    std::vector<GnElement> ab{0, g.a(), g.b(), g.a() | g.b()};
    CHECK(g.centre() == ab);
    CHECK(g.derived() == ab);
    CHECK(g.finite()->centre().size() == 4);
  }
}

TEST_CASE("conjugacy class of H_n") {
  for (unsigned n = 1; n <= 3; ++n) {
    GnGroup g(n);
    const GnElement h = g.x(1U << n);
    std::vector<std::vector<GnElement>> expected;
    for (GnElement z : {GnElement{0}, g.a(), g.b(), g.a() | g.b()}) expected.push_back({0, g.multiply(h, z)});
    std::sort(expected.begin(), expected.end());
    auto cls = gn::stabilizer_class(g);
    CHECK(cls == expected);
    for (const auto& s : cls) CHECK(s.size() == 2);
    std::size_t centraliser = 0;
    for (GnElement s = 0; s < g.order(); ++s) centraliser += g.multiply(s, h) == g.multiply(h, s);
    CHECK(g.order() / centraliser == 4);
  }
}

TEST_CASE("alpha_n moves H_n out of its class") {
  for (unsigned n = 1; n <= 3; ++n) {
    GnGroup g(n);
    auto alpha = gn::alpha_n(g);
    CHECK(alpha.is_automorphism());
    CHECK(alpha.images[g.a()] == g.a());
    CHECK(alpha.images[g.b()] == g.b());
    const unsigned m = 1U << n;
    std::vector<GnElement> image{0, alpha.images[g.x(m)]};
    CHECK(image[1] == g.multiply(g.x(m), g.x(m + 1)));
    auto cls = gn::stabilizer_class(g);
    CHECK_FALSE(std::binary_search(cls.begin(), cls.end(), image));
  }
  GnGroup g(1);
  auto bad = gn::extend_generator_images(g, {g.x(1), g.x(1), g.x(3)}, g.a(), g.b());
  CHECK_FALSE(bad.is_automorphism());
}

TEST_CASE("orbit lengths of the class-preserving automorphisms") {
  for (unsigned n = 1; n <= 3; ++n) {
    CAPTURE(n);
    GnGroup g(n);
    CHECK(gn::orbit_masks_serial(g) == gn::orbit_masks_parallel(g));
    auto s = gn::maol_perm_summary(g);
    CHECK(s.central_automorphisms == (1ULL << (2 * g.k())));
    CHECK(s.preserving_class == s.central_automorphisms);
    CHECK(s.max_orbit_length == 4);
    using Row = std::pair<std::uint32_t, std::uint32_t>;
    CHECK(s.elements_by_orbit_length == std::vector<Row>{{1, 4}, {4, g.order() - 4}});
    CHECK(gn::orbit_masks_serial(g)[0] == 1);
    CHECK(gn::maol_perm(n) == 4);
  }
}

TEST_CASE("central automorphisms are transitive on nontrivial centre cosets") {
  for (unsigned n = 1; n <= 2; ++n) {
    CAPTURE(n);
    GnGroup g(n);
    std::vector<GnElement> labels;
    auto fg = g.finite(&labels);
    auto cent = central_automorphisms(fg);
    CHECK(cent.size() == (1ULL << (2 * g.k())));
    if (n == 1) CHECK(cent.is_subset_of(automorphism_group(fg)));
    for (const auto& m : cent.maps()) CHECK(respects_generators(*fg, *fg, m));
    auto lengths = element_orbit_lengths(cent);
    for (std::size_t e = 0; e < fg->order(); ++e) {
      bool central = g.x_bits(labels[e]) == 0;
      CHECK(lengths[e] == (central ? 1U : 4U));
    }
  }
}

TEST_CASE("G_1 through the permutation pipeline") {
  GnGroup g(1);
  std::vector<GnElement> labels;
  auto fg = g.finite(&labels);
  auto index_of = [&](GnElement u) {
    return static_cast<Elem>(std::find(labels.begin(), labels.end(), u) - labels.begin());
  };
  auto action = coset_action(fg, {0, index_of(g.x(2))});
  CHECK(action.image.degree() == 16);
  CHECK(action.image.is_transitive());
  CHECK(action.epimorphism.bijective);

  auto full = automorphism_group(action.image.finite());
  CHECK(full.size() == 2 * (1U << (2 * g.k())));
  auto perm = aut_perm(action.image, full);
  CHECK(perm.size() == (1U << (2 * g.k())));
  CHECK(max_orbit_length(perm) == 4);
  CHECK(max_orbit_length(perm) == gn::maol_perm(1));

  // The automorphisms of the abstract group are the central ones and their
  // products with alpha_1.
  auto aut = automorphism_group(fg);
  auto cent = central_automorphisms(fg);
  auto alpha = gn::alpha_n(g);
  std::vector<std::vector<Elem>> expected;
  for (const auto& c : cent.maps()) {
    std::vector<Elem> m(fg->order());
    for (std::size_t e = 0; e < m.size(); ++e) m[e] = index_of(alpha.images[labels[c[e]]]);
    expected.push_back(c);
    expected.push_back(std::move(m));
  }
  CHECK(aut == AutSet(fg, expected));
}

TEST_CASE("words") {
  GnGroup g(1);
  CHECK(g.to_string(0) == "1");
  CHECK(g.to_string(g.multiply(g.x(1), g.x(1))) == "b");
  CHECK(g.to_string(g.multiply(g.x(2), g.x(1))) == "x1*x2*a");
}
