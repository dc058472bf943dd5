#pragma once

// Brute-force reference computations used only by the tests. They work on
// raw image vectors and explicit multiplication tables and avoid the
// library's algorithms on purpose.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Images = std::vector<std::uint32_t>;

Images compose(const Images& p, const Images& q);

/// Every product of generators, found by closing under right multiplication.
std::set<Images> closure(std::size_t degree, const std::vector<Images>& gens,
                         std::size_t cap = 100000);

/// A group as an explicit table over 0..n-1 with identity 0.
struct Table {
  std::size_t n = 0;
  std::vector<std::uint32_t> mul;
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * n + b]; }
};

/// Counts bijections phi with phi(xy) = phi(x)phi(y) by assigning images
/// element by element and checking every product among assigned elements.
std::size_t count_automorphisms(const Table& t);

/// Euler's totient by counting k in 1..n with gcd(k, n) = 1.
std::uint64_t totient(std::uint64_t n);

/// All subgroups of a table group, as sorted element lists, found by
/// closing the set of cyclic subgroups under joins.
std::vector<std::vector<std::uint32_t>> all_subgroups(const Table& t);

/// Subgroup generated by a set of elements of a table group (sorted).
std::vector<std::uint32_t> span(const Table& t, const std::vector<std::uint32_t>& gens);

/// Is there a nontrivial automorphism of t fixing every element of `fixed`?
/// Searches images of a generating set relative to `fixed` and checks every
/// product of the resulting map.
bool has_nontrivial_automorphism_fixing(const Table& t, const std::vector<std::uint32_t>& fixed);

}  // namespace oracle
