#pragma once

// The explicit bound functions, evaluated exactly while the value has at
// most kMaxExactBits bits and otherwise as certified brackets on log2, and
// the bound inequalities checked on a corpus of groups.

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "permorbit/automorphisms.hpp"
#include "permorbit/perm_group.hpp"
#include "permorbit/report.hpp"

namespace permorbit::bounds {

inline constexpr std::uint64_t kMaxExactBits = 1'000'000;
inline constexpr mpfr_prec_t kLogPrecision = 256;

/// An MPFR number at kLogPrecision bits.
class Real {
 public:
  Real();
  Real(const Real& other);
  Real& operator=(const Real& other);
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  /// Decimal string rounded in the given direction.
  std::string to_string(mpfr_rnd_t rnd, int digits = 30) const;
  double to_double() const;

 private:
  mpfr_t value_;
};

struct BoundValue {
  std::optional<mpz_class> exact;
  /// log2 of the value lies in [log2_lower, log2_upper].
  Real log2_lower;
  Real log2_upper;

  nlohmann::json to_json() const;
};

/// 16^{(n+1)d} n^{2n^3 d^2 (5 + d + 4 n^3 log2 n) + 2n^3 + 4nd + 4d}. The
/// exponent of n is an integer when d = 0 or n is a power of two; only then
/// can the value be exact.
BoundValue frak_f(std::uint64_t d, std::uint64_t n);
/// n^{n (1 + floor(log2 n))} + 1.
BoundValue ledermann_neumann_bound(std::uint64_t n);
/// c^{d c^d (1 + floor(d log2 c))} + 1.
BoundValue improved_bound(std::uint64_t d, std::uint64_t c);

/// value <= bound, using the exact bound if present and otherwise an
/// upward-rounded log2(value) against the lower bracket.
bool certified_le(const mpz_class& value, const BoundValue& bound);

/// Invariants of one group that the bound checks read.
struct GroupFacts {
  std::string label;
  PermutationGroup group;
  std::uint64_t order = 0;
  std::uint64_t derived_order = 0;
  /// Smallest size of a generating set, by exhaustive search.
  std::size_t rank = 0;
  std::size_t aut_order = 0;
  std::size_t aut_perm_order = 0;
  std::uint32_t maol = 0;
  std::uint32_t maol_perm = 0;

  nlohmann::json to_json() const;
};

/// Throws std::invalid_argument for intransitive groups and CapExceeded
/// when an automorphism search exceeds the caps.
GroupFacts group_facts(std::string label, const PermutationGroup& g, const AutOptions& options = {});

/// |G| <= frak_f(d(G), |Aut_perm(G)|).
VerificationReport check_ledneu_permutation(const GroupFacts& f);
/// |Aut_perm(G)| <= maol_perm(G)^{d(G)}.
VerificationReport check_semiregular_count(const GroupFacts& f);
/// |Aut(G)| <= maol(G)^{d(G)} and |G| <= improved_bound(d(G), maol(G)).
VerificationReport check_improved_abstract(const GroupFacts& f);
/// |G'| <= n^{2n^3} with n = |Aut_perm(G)|.
VerificationReport check_derived_order(const GroupFacts& f);

struct CorpusGroup {
  std::string label;
  PermutationGroup group;
};

/// Transitive groups of degree <= max_degree from the census, the eleven
/// candidate pairs in their coset actions, and G_1 on the cosets of H_1.
std::vector<CorpusGroup> standard_corpus(std::size_t max_degree = 6);

/// All four checks on every group.
VerificationReport check_corpus(const std::vector<CorpusGroup>& corpus, const AutOptions& options = {});

/// frak_f(1,1) = 256, ledermann_neumann_bound(2) = 17, improved_bound(d,1) = 2.
VerificationReport check_spot_values();

}  // namespace permorbit::bounds
