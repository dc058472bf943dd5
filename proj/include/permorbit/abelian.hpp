#pragma once

// Finite abelian groups in primary-decomposition coordinates. An element is
// a vector of residues, one per cyclic factor Z/p^e, with the factors of
// each prime stored together and in descending order of e.

#include <cstdint>
#include <optional>
#include <vector>

namespace permorbit::abelian {

using Vec = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kMaxAbelianOrder = 1ULL << 20;

struct PrimaryComponent {
  std::uint64_t p = 0;
  /// e_1 >= ... >= e_r >= 1.
  std::vector<std::uint32_t> exponents;
};

class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Z/m_1 x ... x Z/m_k for arbitrary m_i >= 1, decomposed into primary parts.
  /// Both factories throw std::length_error above kMaxAbelianOrder.
  static AbelianGroup from_cyclic_orders(const std::vector<std::uint64_t>& orders);
  /// Z/p^{e_1} x ... x Z/p^{e_r}; exponents may be given in any order.
  static AbelianGroup p_group(std::uint64_t p, std::vector<std::uint32_t> exponents);

  const std::vector<PrimaryComponent>& components() const noexcept { return components_; }
  /// Modulus p^e of each coordinate.
  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  /// Prime of each coordinate.
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::size_t dimension() const noexcept { return moduli_.size(); }
  std::uint64_t order() const noexcept { return order_; }
  bool is_p_group() const noexcept { return components_.size() <= 1; }

  Vec zero() const { return Vec(dimension(), 0); }
  Vec unit(std::size_t i) const;
  Vec add(const Vec& a, const Vec& b) const;
  void add_to(Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  Vec scale(std::uint64_t k, const Vec& a) const;
  std::uint64_t order_of(const Vec& a) const;
  bool contains(const Vec& a) const;

  /// Converts a tuple of residues for the factors passed to from_cyclic_orders.
  Vec from_cyclic(const std::vector<std::uint64_t>& residues) const;
  /// The component of a at prime p (other coordinates zeroed).
  Vec p_part(const Vec& a, std::uint64_t p) const;

  /// Mixed-radix numbering of the elements.
  std::uint64_t index(const Vec& a) const;
  Vec element(std::uint64_t index) const;

  /// Sorted index list of the subgroup generated by gens.
  std::vector<std::uint64_t> span(const std::vector<Vec>& gens) const;

 private:
  std::vector<PrimaryComponent> components_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t order_ = 1;
  /// For from_cyclic: for each coordinate, the source factor it reduces.
  std::vector<std::size_t> source_factor_;
};

/// Orders match p^{e_i} position by position and the combinations
/// sum_i c_i a_i (0 <= c_i < p^{e_i}) are pairwise distinct.
bool basis_check(const AbelianGroup& a, const std::vector<Vec>& tuple);

struct AdaptedBasis {
  std::vector<Vec> basis;
  /// 0-based positions i_1 < ... < i_s.
  std::vector<std::size_t> indices;
};

/// A basis of the p-group `a` such that p^{e_i - 1} a_i (i in indices) is a
/// basis of the elementary abelian subgroup generated by `b_gens`.
/// Throws std::invalid_argument if a is not a p-group, the subgroup is not
/// elementary abelian, or a generator is not an element of a.
AdaptedBasis adapted_basis(const AbelianGroup& a, const std::vector<Vec>& b_gens);

/// An endomorphism given by the images of the unit vectors.
struct AbelianMap {
  std::vector<Vec> unit_images;
  Vec apply(const AbelianGroup& a, const Vec& x) const;
  /// Well defined, bijective.
  bool is_automorphism(const AbelianGroup& a) const;
  bool is_identity(const AbelianGroup& a) const;
};

struct CentraliserResult {
  bool trivial = false;
  /// Present iff !trivial: a nontrivial automorphism fixing B pointwise.
  std::optional<AbelianMap> witness;
};

/// Whether only the identity automorphism of `a` fixes <b_gens> pointwise.
/// Requires a proper subgroup; throws std::invalid_argument otherwise, or if
/// a generator is not an element of a.
CentraliserResult aut_centralizer_is_trivial(const AbelianGroup& a, const std::vector<Vec>& b_gens);

/// Euler's totient; throws std::invalid_argument for n < 1.
std::uint64_t euler_phi(std::uint64_t n);

/// Prime-power cyclic factor orders of each abelian group of order n, one
/// list per isomorphism class.
std::vector<std::vector<std::uint64_t>> abelian_group_shapes(std::uint64_t n);

}  // namespace permorbit::abelian
