#pragma once

#include <string>
#include <vector>

#include "permorbit/finite_group.hpp"

namespace permorbit {

struct CatalogGroup {
  std::string name;
  FiniteGroupPtr group;
};

/// One group from every isomorphism class of order at most 24 (74 groups),
/// ordered by order. Orders above 24 are rejected.
std::vector<CatalogGroup> small_group_catalog(std::size_t max_order = 24);

/// Number of isomorphism classes of groups of order n, for 1 <= n <= 24.
std::size_t small_group_count(std::size_t n);

/// Z/f_1 x ... x Z/f_k.
FiniteGroup abelian_group(const std::vector<std::size_t>& factors);

/// <x, y | x^m, y^k = x^s, y x y^-1 = x^r>; requires r^k = 1 and s(r-1) = 0 mod m.
FiniteGroup metacyclic_group(std::size_t m, std::size_t k, std::size_t r, std::size_t s);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace permorbit
