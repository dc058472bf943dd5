#pragma once

// Subgroups of Sym(n) up to conjugacy for n <= 7, the transitive groups
// among them, and the classification checks run over that census.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permorbit/automorphisms.hpp"
#include "permorbit/perm_group.hpp"
#include "permorbit/report.hpp"

namespace permorbit::census {

inline constexpr std::size_t kMaxCensusDegree = 7;
inline constexpr std::size_t kDefaultCensusDegree = 6;

struct CensusOptions {
  /// Run the extension step of each round in parallel; the merge is serial
  /// either way, so the result does not depend on this flag.
  bool parallel = true;
};

/// One representative per Sym(n)-conjugacy class of subgroups, ordered by
/// order, then by an invariant key (cycle-type histogram and orbit
/// lengths), then by discovery. `parent` is Sym(n) in every handle.
/// Throws CapExceeded for n > 7 and std::invalid_argument for n = 0.
std::vector<SubgroupHandle> all_subgroups_up_to_conjugacy(std::size_t n, const CensusOptions& options = {});

/// Number of subgroups in the class of h, |Sym(n) : N(h)|.
std::uint64_t conjugacy_class_length(const SubgroupHandle& h);

/// Orbit lengths of Sym(n)-normaliser conjugation on the elements of g;
/// the largest is maol_perm(g). Degree <= 8.
std::uint32_t maol_perm_by_normaliser(const PermutationGroup& g, bool parallel = true);

/// A group from the list of transitive groups all of whose orbits have
/// length at most 3, with the value it is known to take.
struct ListedGroup {
  std::string name;
  PermutationGroup group;
  std::uint32_t maol_perm = 0;
};

/// Regular Z/1, Z/2, Z/3, Z/4, Z/6, (Z/2)^2 and Sym(3), then D_6, D_8 and
/// D_12 on the vertices of a triangle, square and hexagon.
const std::vector<ListedGroup>& small_orbit_groups();

/// Name of the listed group conjugate to g in Sym(deg g), if any.
std::optional<std::string> listed_name(const PermutationGroup& g);

struct CensusEntry {
  std::size_t degree = 0;
  PermutationGroup representative;
  std::uint64_t order = 0;
  std::uint32_t maol_perm = 0;
  bool soluble = false;
  std::optional<std::string> name;
};

std::vector<CensusEntry> transitive_groups(std::size_t degree, const CensusOptions& options = {});

/// Transitive groups of degree 1..max_degree with maol_perm <= threshold
/// against the listed groups with value <= threshold. For threshold > 3
/// there is no reference list and the comparison is skipped.
VerificationReport verify_orbit_length_classification(std::size_t max_degree, std::uint32_t threshold = 3,
                                                      const CensusOptions& options = {});

/// Every transitive group of degree <= max_degree with maol_perm <= 23 is
/// soluble, Alt(5) on 5 points reaches 24; Sym(5) is recorded.
VerificationReport verify_solubility_threshold(std::size_t max_degree, const CensusOptions& options = {});

/// maol_perm of the eleven candidate pairs against their expected values,
/// and the facts that rule them out: G_w core-free, its image P in
/// G/G' nontrivial and a quotient of G_w/G_w', and C_Aut(zG)(P) trivial.
VerificationReport verify_table1(const AutOptions& options = {});

}  // namespace permorbit::census
