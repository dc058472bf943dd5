#pragma once

// Hot loops with an OpenMP version and a serial reference version kept for
// testing and benchmarking. Both versions return identical results.

#include <cstdint>
#include <vector>

#include "permorbit/finite_group.hpp"
#include "permorbit/permutation.hpp"

namespace permorbit::kernels {

/// The permutation of {0..n-1} with lexicographic rank `rank` (0 = identity).
Permutation unrank_permutation(std::size_t n, std::uint64_t rank);
std::uint64_t factorial(std::size_t n);

/// All s in Sym(n), in lexicographic order, with s^-1 x s in `group` for
/// every x in `gens`. `group` must carry its permutations.
std::vector<Permutation> normaliser_scan_serial(const FiniteGroup& group,
                                                const std::vector<Permutation>& gens);
std::vector<Permutation> normaliser_scan_parallel(const FiniteGroup& group,
                                                  const std::vector<Permutation>& gens);

/// Orbit length of every point 0..n-1 under a set of maps that forms a
/// group. The serial version joins x with m[x] in a union-find forest; the
/// parallel one counts the distinct images of each point directly.
std::vector<std::uint32_t> orbit_lengths_serial(const std::vector<std::vector<Elem>>& maps,
                                                std::size_t n);
std::vector<std::uint32_t> orbit_lengths_parallel(const std::vector<std::vector<Elem>>& maps,
                                                  std::size_t n);

}  // namespace permorbit::kernels
