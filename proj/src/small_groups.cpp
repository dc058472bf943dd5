#include "permorbit/small_groups.hpp"

#include <stdexcept>

#include "permorbit/constructors.hpp"

namespace permorbit {

namespace {

FiniteGroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

FiniteGroup from_perm(const PermutationGroup& g) {
  return FiniteGroup::from_permutations(g.degree(), g.generators());
}

FiniteGroup perms(std::size_t degree, const char* gens) {
  return FiniteGroup::from_permutations(degree, parse_permutation_list(gens, degree));
}

/// Acts on the 8 nonzero vectors (u, v) of GF(3)^2, indexed 3u+v-1.
FiniteGroup special_linear_2_3() {
  auto matrix_perm = [](int a, int b, int c, int d) {
    std::vector<Point> images(8);
    for (int u = 0; u < 3; ++u) {
      for (int v = 0; v < 3; ++v) {
        if (u == 0 && v == 0) continue;
        int nu = (u * a + v * c) % 3;
        int nv = (u * b + v * d) % 3;
        images[static_cast<std::size_t>(3 * u + v - 1)] = static_cast<Point>(3 * nu + nv - 1);
      }
    }
    return Permutation(std::move(images));
  };
  return FiniteGroup::from_permutations(8, {matrix_perm(1, 1, 0, 1), matrix_perm(1, 0, 1, 1)});
}

/// (Z/2)^2 semidirect Z/4, the generator of Z/4 swapping the two coordinates.
FiniteGroup klein_by_cyclic4() {
  // Element v + 4t with v in 0..3 (bit 0, bit 1) and t in 0..3.
  auto swap = [](std::uint32_t v) { return ((v & 1U) << 1) | ((v >> 1) & 1U); };
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t v1 = x % 4, t1 = x / 4, v2 = y % 4, t2 = y / 4;
    std::uint32_t w = (t1 % 2) ? swap(v2) : v2;
    return (v1 ^ w) + 4 * ((t1 + t2) % 4);
  };
  return FiniteGroup::generate<std::uint32_t>(0, {1, 4}, mul);
}

/// i^k X^a Z^b with Z X = -X Z: the central product of D8 and Z/4.
FiniteGroup pauli_group() {
  auto mul = [](std::uint32_t x, std::uint32_t y) {
    std::uint32_t k1 = x % 4, a1 = (x / 4) % 2, b1 = x / 8;
    std::uint32_t k2 = y % 4, a2 = (y / 4) % 2, b2 = y / 8;
    std::uint32_t k = (k1 + k2 + 2 * b1 * a2) % 4;
    return k + 4 * (a1 ^ a2) + 8 * (b1 ^ b2);
  };
  return FiniteGroup::generate<std::uint32_t>(0, {1, 4, 8}, mul);
}

}  // namespace

FiniteGroup abelian_group(const std::vector<std::size_t>& factors) {
  std::vector<std::uint32_t> gens;
  std::uint32_t stride = 1;
  for (std::size_t f : factors) {
    if (f < 1) throw std::invalid_argument("abelian_group: factors must be positive");
    if (f > 1) gens.push_back(stride);
    stride *= static_cast<std::uint32_t>(f);
  }
  auto mul = [&factors](std::uint32_t x, std::uint32_t y) {
    std::uint32_t out = 0, s = 1;
    for (std::size_t f : factors) {
      auto fu = static_cast<std::uint32_t>(f);
      out += ((x / s % fu + y / s % fu) % fu) * s;
      s *= fu;
    }
    return out;
  };
  return FiniteGroup::generate<std::uint32_t>(0, gens, mul);
}

FiniteGroup metacyclic_group(std::size_t m, std::size_t k, std::size_t r, std::size_t s) {
  if (m < 1 || k < 1) throw std::invalid_argument("metacyclic_group: m and k must be positive");
  std::vector<std::size_t> rpow(k + 1, 1 % m);
  for (std::size_t i = 1; i <= k; ++i) rpow[i] = rpow[i - 1] * r % m;
  if (rpow[k] != 1 % m || (s * (r + m - 1)) % m != 0) {
    throw std::invalid_argument("metacyclic_group: inconsistent parameters");
  }
  // Element x^a y^b stored as a*k + b.
  auto mul = [=](std::uint32_t x, std::uint32_t y) {
    std::size_t a = x / k, b = x % k, c = y / k, d = y % k;
    std::size_t na = (a + c * rpow[b]) % m;
    std::size_t nb = b + d;
    if (nb >= k) {
      nb -= k;
      na = (na + s) % m;
    }
    return static_cast<std::uint32_t>(na * k + nb);
  };
  std::vector<std::uint32_t> gens;
  if (m > 1) gens.push_back(static_cast<std::uint32_t>(k));
  if (k > 1) gens.push_back(1);
  return FiniteGroup::generate<std::uint32_t>(0, gens, mul);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto nb = static_cast<std::uint32_t>(b.order());
  std::vector<std::uint32_t> gens;
  for (Elem g : a.generators()) gens.push_back(g * nb);
  for (Elem h : b.generators()) gens.push_back(h);
  auto mul = [&](std::uint32_t x, std::uint32_t y) {
    return static_cast<std::uint32_t>(a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb))) * nb +
           b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
  };
  return FiniteGroup::generate<std::uint32_t>(0, gens, mul);
}

std::size_t small_group_count(std::size_t n) {
  static const std::size_t counts[] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                                       1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  if (n < 1 || n > 24) throw std::out_of_range("small_group_count: order must be in 1..24");
  return counts[n];
}

std::vector<CatalogGroup> small_group_catalog(std::size_t max_order) {
  if (max_order > 24) throw std::out_of_range("small_group_catalog: orders above 24 are not listed");
  std::vector<CatalogGroup> out;
  auto add = [&](const char* name, FiniteGroup g) {
    if (g.order() <= max_order) out.push_back({name, share(std::move(g))});
  };
  auto ab = [](std::initializer_list<std::size_t> f) { return abelian_group(std::vector<std::size_t>(f)); };
  const FiniteGroup z2 = ab({2}), z3 = ab({3}), z4 = ab({4});
  const FiniteGroup s3 = metacyclic_group(3, 2, 2, 0);
  const FiniteGroup d8 = metacyclic_group(4, 2, 3, 0);
  const FiniteGroup q8 = metacyclic_group(4, 2, 3, 2);
  const FiniteGroup dic12 = metacyclic_group(3, 4, 2, 0);
  const FiniteGroup a4 = from_perm(alternating_natural(4));

  add("1", ab({}));
  add("Z2", ab({2}));
  add("Z3", ab({3}));
  add("Z4", ab({4}));
  add("Z2^2", ab({2, 2}));
  add("Z5", ab({5}));
  add("Z6", ab({6}));
  add("S3", metacyclic_group(3, 2, 2, 0));
  add("Z7", ab({7}));
  add("Z8", ab({8}));
  add("Z4xZ2", ab({4, 2}));
  add("Z2^3", ab({2, 2, 2}));
  add("D8", metacyclic_group(4, 2, 3, 0));
  add("Q8", metacyclic_group(4, 2, 3, 2));
  add("Z9", ab({9}));
  add("Z3^2", ab({3, 3}));
  add("Z10", ab({10}));
  add("D10", metacyclic_group(5, 2, 4, 0));
  add("Z11", ab({11}));
  add("Z12", ab({12}));
  add("Z6xZ2", ab({6, 2}));
  add("A4", from_perm(alternating_natural(4)));
  add("D12", metacyclic_group(6, 2, 5, 0));
  add("Dic12", metacyclic_group(3, 4, 2, 0));
  add("Z13", ab({13}));
  add("Z14", ab({14}));
  add("D14", metacyclic_group(7, 2, 6, 0));
  add("Z15", ab({15}));
  add("Z16", ab({16}));
  add("Z8xZ2", ab({8, 2}));
  add("Z4^2", ab({4, 4}));
  add("Z4xZ2^2", ab({4, 2, 2}));
  add("Z2^4", ab({2, 2, 2, 2}));
  add("D16", metacyclic_group(8, 2, 7, 0));
  add("Q16", metacyclic_group(8, 2, 7, 4));
  add("SD16", metacyclic_group(8, 2, 3, 0));
  add("M16", metacyclic_group(8, 2, 5, 0));
  add("Z4:Z4", metacyclic_group(4, 4, 3, 0));
  add("Z2^2:Z4", klein_by_cyclic4());
  add("D8xZ2", direct_product(d8, z2));
  add("Q8xZ2", direct_product(q8, z2));
  add("Pauli", pauli_group());
  add("Z17", ab({17}));
  add("Z18", ab({18}));
  add("Z6xZ3", ab({6, 3}));
  add("D18", metacyclic_group(9, 2, 8, 0));
  add("S3xZ3", direct_product(s3, z3));
  add("Z3^2:Z2", perms(9, "(1,4,7)(2,5,8)(3,6,9),(1,2,3)(4,5,6)(7,8,9),(2,3)(4,7)(5,9)(6,8)"));
  add("Z19", ab({19}));
  add("Z20", ab({20}));
  add("Z10xZ2", ab({10, 2}));
  add("D20", metacyclic_group(10, 2, 9, 0));
  add("Dic20", metacyclic_group(5, 4, 4, 0));
  add("F20", metacyclic_group(5, 4, 2, 0));
  add("Z21", ab({21}));
  add("Z7:Z3", metacyclic_group(7, 3, 2, 0));
  add("Z22", ab({22}));
  add("D22", metacyclic_group(11, 2, 10, 0));
  add("Z23", ab({23}));
  add("Z24", ab({24}));
  add("Z12xZ2", ab({12, 2}));
  add("Z6xZ2^2", ab({6, 2, 2}));
  add("S4", from_perm(symmetric_natural(4)));
  add("SL(2,3)", special_linear_2_3());
  add("A4xZ2", direct_product(a4, z2));
  add("D24", metacyclic_group(12, 2, 11, 0));
  add("Dic24", metacyclic_group(12, 2, 11, 6));
  add("Z3:Z8", metacyclic_group(3, 8, 2, 0));
  add("S3xZ2^2", direct_product(s3, ab({2, 2})));
  add("Dic12xZ2", direct_product(dic12, z2));
  add("D8xZ3", direct_product(d8, z3));
  add("Q8xZ3", direct_product(q8, z3));
  add("S3xZ4", direct_product(s3, z4));
  // D8 = <(1,2,3,4),(1,3)> acting on Z/3 = <(5,6,7)> through D8 -> D8/<(1,3),(2,4)>.
  add("Z3:D8", perms(7, "(1,2,3,4)(6,7),(1,3),(5,6,7)"));
  return out;
}

}  // namespace permorbit
