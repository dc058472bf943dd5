#pragma once

#include <vector>

#include "permorbit/finite_group.hpp"

namespace permorbit {

/// A map between the element sets of two finite groups.
struct GroupMap {
  FiniteGroupPtr source;
  FiniteGroupPtr target;
  /// images[x] is the image of source element x.
  std::vector<Elem> images;
  bool homomorphism_verified = false;
  bool bijective = false;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_automorphism() const { return homomorphism_verified && bijective && source == target; }
};

/// Checks phi(x*s) == phi(x)*phi(s) for every x and every generator s of the
/// source. By induction on word length this is equivalent to the full check.
bool respects_generators(const FiniteGroup& source, const FiniteGroup& target,
                         const std::vector<Elem>& images);

/// Exhaustive check of phi(xy) == phi(x)phi(y) over all pairs.
bool respects_all_products(const FiniteGroup& source, const FiniteGroup& target,
                           const std::vector<Elem>& images);

bool is_bijection(const std::vector<Elem>& images, std::size_t target_order);

/// Fills in both certificate flags.
GroupMap make_group_map(FiniteGroupPtr source, FiniteGroupPtr target, std::vector<Elem> images);

/// Image of a subgroup given as an element list, sorted.
std::vector<Elem> image_of(const GroupMap& map, const std::vector<Elem>& elems);

}  // namespace permorbit
