#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "permorbit/finite_group.hpp"
#include "permorbit/group_map.hpp"
#include "permorbit/perm_group.hpp"

namespace permorbit {

inline constexpr std::size_t kDefaultAutCap = 10'000;
inline constexpr std::size_t kHardAutCap = 100'000;
inline constexpr std::size_t kDefaultAutOrderCap = 2000;

struct AutOptions {
  /// Largest |G| accepted by automorphism_group.
  std::size_t order_cap = kDefaultAutOrderCap;
  /// Largest number of automorphisms held explicitly; clamped to kHardAutCap.
  std::size_t aut_cap = kDefaultAutCap;
  /// Parallelise the search over first-generator candidates.
  bool parallel = true;
};

/// A set of automorphisms of one group, each stored as its image table.
/// Maps are kept sorted lexicographically and free of duplicates.
class AutSet {
 public:
  AutSet() = default;
  AutSet(FiniteGroupPtr group, std::vector<std::vector<Elem>> maps);

  const FiniteGroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return maps_.size(); }
  const std::vector<std::vector<Elem>>& maps() const noexcept { return maps_; }
  const std::vector<Elem>& operator[](std::size_t i) const { return maps_[i]; }
  bool contains(const std::vector<Elem>& map) const;
  bool contains_identity() const;
  GroupMap group_map(std::size_t i) const;

  /// Checks closure under composition and inverses.
  bool is_closed() const;
  /// Every member of *this is in `other`.
  bool is_subset_of(const AutSet& other) const;

 private:
  FiniteGroupPtr group_;
  std::vector<std::vector<Elem>> maps_;
};

bool operator==(const AutSet& a, const AutSet& b);

/// Fingerprint that every automorphism preserves.
struct ElementFingerprint {
  std::uint32_t order;
  std::uint32_t class_size;
  std::uint32_t abelianized_order;
  auto operator<=>(const ElementFingerprint&) const = default;
};

std::vector<ElementFingerprint> fingerprints(const FiniteGroup& g);

struct GeneratingTuple {
  std::size_t rank = 0;
  std::vector<Elem> tuple;
};

/// A shortest generating tuple. The first entry ranges over conjugacy class
/// representatives, later entries over all elements outside the span so far.
GeneratingTuple min_generating_tuple(const FiniteGroup& g);

/// Depth-first search over images of `gens` (which must generate `src`),
/// one candidate list per generator. Each prefix is checked for
/// consistency (and injectivity when requested) on the subgroup it
/// generates. `visit` receives every complete homomorphism and returns false
/// to stop. `first` pins generator 0 to one candidate index. Returns false
/// iff stopped by the visitor.
bool search_homomorphisms(const FiniteGroup& src, const FiniteGroup& dst,
                          const std::vector<Elem>& gens,
                          const std::vector<std::vector<Elem>>& candidates,
                          const std::function<bool(const std::vector<Elem>&)>& visit,
                          bool injective = true, std::optional<std::size_t> first = std::nullopt);

AutSet automorphism_group(const FiniteGroupPtr& g, const AutOptions& options = {});
AutSet automorphism_group(const PermutationGroup& g, const AutOptions& options = {});

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

/// A nontrivial automorphism fixing every element of `fixed`, if one exists.
std::optional<GroupMap> find_automorphism_fixing(const FiniteGroupPtr& g,
                                                 const std::vector<Elem>& fixed);

AutSet inner_automorphisms(const FiniteGroupPtr& g);

/// A homomorphism f: G -> ζG, stored as its image table.
using CentralHom = std::vector<Elem>;
std::vector<CentralHom> central_homomorphisms(const FiniteGroup& g);
/// The α_f: g -> g f(g) that are bijective, i.e. no 1 != z in ζG has f(z) = z^-1.
AutSet central_automorphisms(const FiniteGroupPtr& g);

/// Exponents e in [0, Exp(G)) for which g -> g^e is an automorphism.
std::vector<std::uint64_t> power_map_exponents(const FiniteGroup& g);
AutSet power_map_automorphisms(const FiniteGroupPtr& g);

/// Automorphisms of a transitive group that map the stabilizer of point 0
/// to some point stabilizer. Throws std::invalid_argument if intransitive.
AutSet aut_perm(const PermutationGroup& g, const AutOptions& options = {});
/// Same filter applied to a precomputed Aut(G) of g.finite().
AutSet aut_perm(const PermutationGroup& g, const AutSet& full);

inline constexpr std::size_t kMaxNormaliserScanDegree = 8;

/// Conjugation maps induced by {s in Sym(n) : G^s = G}, n <= 8.
AutSet aut_perm_via_normaliser(const PermutationGroup& g, bool parallel = true);
/// The normalising permutations themselves.
std::vector<Permutation> normaliser_in_symmetric_group(const PermutationGroup& g, bool parallel = true);

/// Orbit length of every element under the maps of `auts`, which must form a group.
std::vector<std::uint32_t> element_orbit_lengths(const AutSet& auts, bool parallel = true);
/// Orbit length -> number of orbits of that length.
std::map<std::uint32_t, std::uint32_t> orbit_length_multiset(const AutSet& auts, bool parallel = true);
std::uint32_t max_orbit_length(const AutSet& auts, bool parallel = true);

// Standard tuples: lifts of tuples built from bases of the Sylow subgroups
// of G/G', and the power, conjugation and commutator data attached to them.

/// A basis (x_1..x_r) of an abelian p-group: orders p^{e_1} >= ... >= p^{e_r}
/// and |<x_1..x_r>| = |P|. Elements are indices in `g`; `sylow` lists the
/// elements of the p-subgroup in question.
std::optional<std::vector<Elem>> abelian_p_basis(const FiniteGroup& g, const std::vector<Elem>& sylow,
                                                 std::uint32_t p);
/// A d(H)-tuple whose projection to every Sylow subgroup is a basis padded
/// with identities. Throws std::invalid_argument if h is not abelian.
std::vector<Elem> standard_generating_tuple(const FiniteGroup& h);
bool is_standard_generating_tuple(const FiniteGroup& h, const std::vector<Elem>& tuple);
/// The tuple projects to a standard generating tuple of G/G'.
bool is_standard_tuple(const FiniteGroup& g, const std::vector<Elem>& tuple);

struct PacTuple {
  /// g_i raised to the order of g_i G' in G/G'.
  std::vector<Elem> powers;
  /// Conjugation by g_i restricted to G' (images of the sorted G' elements).
  std::vector<std::vector<Elem>> conjugations;
  /// [g_i, g_j] for i < j, in lexicographic order of (i, j).
  std::vector<Elem> commutators;
  auto operator<=>(const PacTuple&) const = default;
};

/// Throws std::invalid_argument if `tuple` is not a standard tuple in g.
PacTuple pac_tuple(const FiniteGroup& g, const std::vector<Elem>& tuple);
bool pac_equivalent(const FiniteGroup& g, const std::vector<Elem>& t1, const std::vector<Elem>& t2);

std::uint32_t maol(const FiniteGroupPtr& g, const AutOptions& options = {});
std::uint32_t maol_perm(const PermutationGroup& g, const AutOptions& options = {});

}  // namespace permorbit
