#pragma once

// Property suites for the structural lemmas: the stabilizer-mapping
// description of Aut_perm, the centraliser criterion for abelian groups
// and root-adapted bases of elementary abelian subgroups.

#include <cstdint>

#include "permorbit/report.hpp"

namespace permorbit::lemmas {

struct LemmaOptions {
  std::size_t max_transitive_degree = 6;
  std::size_t max_regular_order = 24;
  std::uint64_t max_centraliser_order = 64;
  /// 2-groups up to 2^9 and 3-groups up to 3^6, i.e. all |A| <= 3^6.
  std::uint32_t max_exponent_p2 = 9;
  std::uint32_t max_exponent_p3 = 6;
  /// Groups whose socle has more subspaces than this are sampled instead
  /// of enumerated.
  std::uint64_t exhaustive_limit = UINT64_MAX;
  std::size_t sample_size = 600;
  std::uint64_t seed = 12345;
  bool parallel = true;
};

/// aut_perm(G) equals the automorphisms induced by the Sym(n)-normaliser
/// for every transitive G of degree <= max_transitive_degree, and equals
/// Aut(G) for the regular representation of every group of order <=
/// max_regular_order.
VerificationReport check_aut_perm_characterisation(const LemmaOptions& options = {});

/// aut_centralizer_is_trivial against a direct search for a nontrivial
/// automorphism fixing B, for all B < A with A abelian of order <= max.
VerificationReport check_centraliser_criterion(const LemmaOptions& options = {});

/// adapted_basis on every elementary abelian B <= A, A a 2- or 3-group
/// within the exponent bounds. Basis validity is checked through the socle:
/// a tuple with the right orders is a basis iff the p^{e_i - 1} a_i are
/// independent over GF(p).
VerificationReport check_adapted_bases(const LemmaOptions& options = {});

/// Z/p^3 x Z/p with B = <p a_1 + a_2> of order p^2: adapted_basis rejects
/// it and no basis has an entry with a power generating B (p = 2, 3).
VerificationReport check_non_elementary_counterexample();

VerificationReport run_all(const LemmaOptions& options = {});

}  // namespace permorbit::lemmas
