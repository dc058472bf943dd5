#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "permorbit/permutation.hpp"

namespace permorbit {

/// Base and strong generating set produced by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    /// Strong generators fixing every earlier base point.
    std::vector<Permutation> generators;
    /// Basic orbit, in discovery order; orbit[0] == base_point.
    std::vector<Point> orbit;
    /// rep_index[b] indexes transversal for points b in the orbit, else -1.
    std::vector<std::int32_t> rep_index;
    /// transversal[i] maps base_point to orbit[i]; inverse_transversal holds the inverses.
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  StabilizerChain() = default;

  /// Base points start with base_prefix and continue with the smallest moved
  /// point of the first generator not yet accounted for.
  static StabilizerChain build(std::size_t degree, const std::vector<Permutation>& generators,
                               const std::vector<Point>& base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;

  mpz_class order() const;

  /// Strips g through the chain starting at `first_level`. Returns the
  /// residue and the level at which stripping stopped (levels().size() when
  /// it ran through every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t first_level = 0) const;

  bool contains(const Permutation& g) const;

 private:
  void add_level(Point base_point);
  void rebuild_orbit(std::size_t level);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace permorbit
