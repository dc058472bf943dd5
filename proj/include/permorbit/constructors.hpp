#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "permorbit/group_map.hpp"
#include "permorbit/perm_group.hpp"

namespace permorbit {

PermutationGroup cyclic_regular(std::size_t m);
/// Regular representation of Z/f_1 x ... x Z/f_k on f_1*...*f_k points.
PermutationGroup abelian_regular(const std::vector<std::size_t>& factors);
PermutationGroup dihedral_natural(std::size_t n);
PermutationGroup symmetric_natural(std::size_t n);
PermutationGroup alternating_natural(std::size_t n);
/// Right regular representation of an abstract group.
PermutationGroup regular_representation(const FiniteGroup& g);

/// G x H acting on the disjoint union: G on 0..deg(G)-1, H on the rest.
struct DirectProduct {
  PermutationGroup group;
  std::size_t left_degree = 0;
  std::size_t right_degree = 0;
  Permutation embed_left(const Permutation& g) const;
  Permutation embed_right(const Permutation& h) const;
  /// (g, h) as one permutation of the product.
  Permutation pair(const Permutation& g, const Permutation& h) const;
};

DirectProduct direct_product(const PermutationGroup& g, const PermutationGroup& h);

/// Right multiplication on the right cosets of h.
struct CosetAction {
  PermutationGroup image;
  /// Source: g.finite(); target: image.finite().
  GroupMap epimorphism;
  /// The point whose stabilizer is the image of h (always 0).
  Point point = 0;
  /// representatives[i] is an element (index in g.finite()) of coset i.
  std::vector<Elem> representatives;
};

/// Cosets are numbered breadth-first from h over the generators of g.
CosetAction coset_action(const PermutationGroup& g, const PermutationGroup& h);
CosetAction coset_action(const FiniteGroupPtr& g, const std::vector<Elem>& h);

/// The eleven pairs (G, G_w) with G = A x Alt(5), A abelian, left over by
/// the solubility argument, listed with the normaliser orbit bound they
/// are expected to reach.
struct CandidatePair {
  int row = 0;
  std::string group_label;
  std::string stabilizer_label;
  std::vector<std::size_t> abelian_factors;
  /// A x Alt(5) on the disjoint union of the abelian part and 5 points.
  DirectProduct product;
  PermutationGroup stabilizer;
  /// The transitive group: right multiplication on the cosets of `stabilizer`.
  CosetAction action;
  std::uint64_t expected_maol_perm = 0;
};

inline constexpr int kCandidatePairCount = 11;
CandidatePair candidate_pair(int row);

/// JSON-described group; see the README for the accepted kinds.
struct GroupSpec {
  std::string kind;
  nlohmann::json params;

  static GroupSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  PermutationGroup build() const;
};

/// Parses "degree=<n>; gens=<perm>,<perm>,...".
PermutationGroup parse_group_spec(const std::string& text);

}  // namespace permorbit
