#pragma once

// The 2-groups G_n generated by x_1..x_k (k = 2^n + 1) and central
// involutions a, b, with [x_{2i-1}, x_{2i}] = a, [x_{2i}, x_{2i+1}] = b, all
// other generator pairs commuting, x_1^2 = x_k^2 = b and the remaining x_i
// involutions. Elements are normal forms x_1^{e_1}..x_k^{e_k} a^s b^t packed
// into an integer: bit i-1 holds e_i, bit k holds s, bit k+1 holds t. The
// packed value doubles as the element's index.

#include <cstdint>
#include <string>
#include <vector>

#include "permorbit/automorphisms.hpp"
#include "permorbit/finite_group.hpp"
#include "permorbit/perm_group.hpp"
#include "permorbit/report.hpp"

namespace permorbit::gn {

using GnElement = std::uint32_t;

inline constexpr unsigned kMinN = 1;
inline constexpr unsigned kMaxN = 3;

class GnGroup {
 public:
  /// Throws std::out_of_range unless 1 <= n <= 3.
  explicit GnGroup(unsigned n);

  unsigned n() const noexcept { return n_; }
  /// Number of x generators, 2^n + 1.
  unsigned k() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return 1U << (k_ + 2); }

  static constexpr GnElement identity() noexcept { return 0; }
  /// x_i for 1 <= i <= k.
  GnElement x(unsigned i) const;
  GnElement a() const noexcept { return 1U << k_; }
  GnElement b() const noexcept { return 1U << (k_ + 1); }
  std::vector<GnElement> generators() const;

  GnElement multiply(GnElement u, GnElement v) const noexcept;
  GnElement inverse(GnElement u) const noexcept;
  GnElement conjugate(GnElement u, GnElement s) const noexcept;
  /// The x-part of u, as a bit mask over x_1..x_k.
  std::uint32_t x_bits(GnElement u) const noexcept { return u & x_mask_; }
  bool contains(GnElement u) const noexcept { return u < order(); }

  /// Word in x_i, a, b; the identity prints as "1".
  std::string to_string(GnElement u) const;

  /// Elements commuting with every generator, sorted.
  std::vector<GnElement> centre() const;
  /// Subgroup generated by all commutators [u, v], sorted.
  std::vector<GnElement> derived() const;
  /// Sorted elements of the subgroup generated by gens.
  std::vector<GnElement> closure(const std::vector<GnElement>& gens) const;

  /// The group as a table over the generators x_1..x_k. `labels[e]` is the
  /// normal form of table element e.
  FiniteGroupPtr finite(std::vector<GnElement>* labels = nullptr) const;

 private:
  unsigned n_;
  unsigned k_;
  std::uint32_t x_mask_;
  // Adjacent pairs (x_t, x_{t+1}), 0-based t, whose commutator is a (t even)
  // or b (t odd).
  std::uint32_t a_pairs_;
  std::uint32_t b_pairs_;
  // x_1 and x_k square to b.
  std::uint32_t b_squares_;
};

/// The conjugacy class of H_n = <x_{2^n}> as sorted element lists, sorted.
std::vector<std::vector<GnElement>> stabilizer_class(const GnGroup& g);

/// Right multiplication on the cosets of H_n, a faithful transitive action
/// of degree |G_n| / 2.
PermutationGroup coset_representation(const GnGroup& g);

/// An endomorphism as a table of images indexed by element.
struct GnMap {
  std::vector<GnElement> images;
  bool homomorphism = false;
  bool bijective = false;
  bool is_automorphism() const { return homomorphism && bijective; }
};

/// Extends generator images by multiplying out normal forms, then verifies
/// phi(u s) = phi(u) phi(s) for all u and generators s, and bijectivity.
GnMap extend_generator_images(const GnGroup& g, const std::vector<GnElement>& x_images, GnElement a_image,
                              GnElement b_image);

/// Fixes a, b and every x_i except x_{2^n} -> x_{2^n} x_{2^n + 1}.
GnMap alpha_n(const GnGroup& g);

/// A central homomorphism f: G_n -> <a, b>, determined by the a- and
/// b-components of f(x_i): f(u) has a-bit parity(x_bits(u) & a_mask), b-bit
/// parity(x_bits(u) & b_mask).
struct CentralHomCode {
  std::uint32_t a_mask = 0;
  std::uint32_t b_mask = 0;
};

GnElement apply_central(const GnGroup& g, const CentralHomCode& f, GnElement u) noexcept;

/// For each element u, a 4-bit mask of the z in <a, b> (bit index za + 2 zb)
/// reached as f(u) over all f whose automorphism u -> u f(u) keeps H_n in
/// its conjugacy class. The orbit of u is u times the masked z.
std::vector<std::uint8_t> orbit_masks_serial(const GnGroup& g);
std::vector<std::uint8_t> orbit_masks_parallel(const GnGroup& g);

struct GnOrbitSummary {
  std::uint64_t central_automorphisms = 0;
  /// Those mapping H_n into its conjugacy class.
  std::uint64_t preserving_class = 0;
  std::uint32_t max_orbit_length = 0;
  /// Orbit length -> number of elements in orbits of that length.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> elements_by_orbit_length;
};

/// Orbit statistics of the central automorphisms that keep H_n in its
/// class, which make up the automorphisms preserving the point stabilizer
/// class of the coset action on H_n.
GnOrbitSummary maol_perm_summary(const GnGroup& g, bool parallel = true);
std::uint32_t maol_perm(unsigned n, bool parallel = true);

/// Order, centre, the class of H_n, alpha_n and maol_perm(G_n) = 4. For
/// n = 1 the value is recomputed from the degree-16 coset action through the
/// generic automorphism pipeline.
VerificationReport verify_family_member(unsigned n, const AutOptions& options = {});

}  // namespace permorbit::gn
