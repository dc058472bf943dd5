#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "permorbit/finite_group.hpp"
#include "permorbit/permutation.hpp"
#include "permorbit/stabilizer_chain.hpp"

namespace permorbit {

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

/// A permutation group given by generators. The stabilizer chain and the
/// element table are built on first use and shared between copies.
class PermutationGroup {
 public:
  PermutationGroup() : PermutationGroup(1, {}) {}
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const;
  mpz_class order() const { return chain().order(); }
  /// Order as a machine integer; throws CapExceeded beyond 2^63.
  std::uint64_t order_u64() const;
  bool contains(const Permutation& p) const;

  /// All elements, enumerated from the stabilizer chain.
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) const;

  /// Cayley table of the group; throws CapExceeded above FiniteGroup::kMaxOrder.
  FiniteGroupPtr finite() const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  bool is_regular() const;

 private:
  struct Cache;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// A subgroup of `parent` together with the parent it lives in.
struct SubgroupHandle {
  PermutationGroup parent;
  PermutationGroup group;
};

SubgroupHandle make_subgroup(const PermutationGroup& parent, std::vector<Permutation> generators);

SubgroupHandle point_stabilizer(const PermutationGroup& g, Point p);

/// Sorted element indices in g.finite() of the members of h.
std::vector<Elem> element_indices(const PermutationGroup& g, const PermutationGroup& h);
/// Subgroup of g spanned by the listed element indices of g.finite().
PermutationGroup subgroup_from_indices(const PermutationGroup& g, const std::vector<Elem>& elems);

bool core_is_trivial(const PermutationGroup& g, const SubgroupHandle& h);

std::vector<std::vector<Permutation>> conjugacy_classes(const PermutationGroup& g);

/// Some element t of g with h^t == k as sets, by scanning all of g.
std::optional<Permutation> subgroup_transporter(const PermutationGroup& g,
                                                const PermutationGroup& h,
                                                const PermutationGroup& k);

SubgroupHandle derived_subgroup(const PermutationGroup& g);
/// G = G^(0) >= G^(1) >= ... down to the first repeated term.
std::vector<PermutationGroup> derived_series(const PermutationGroup& g);
bool is_soluble(const PermutationGroup& g);
SubgroupHandle centre(const PermutationGroup& g);
std::uint64_t exponent(const PermutationGroup& g);

}  // namespace permorbit
