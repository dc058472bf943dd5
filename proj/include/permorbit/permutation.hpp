#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permorbit {

/// A point of the permuted domain {0, ..., n-1}.
using Point = std::uint32_t;

/// Raised for malformed permutations, degree mismatches and bad cycle strings.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of {0, ..., n-1}, stored by its image sequence.
///
/// Permutations act on the right: the image of a point w under g is written
/// w^g, and compose(p, q) first applies p and then q.
class Permutation {
 public:
  Permutation() = default;

  /// The identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes an image sequence; throws unless it is a permutation of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint 0-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point p) const noexcept { return images_[p]; }
  Point image(Point p) const;
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// All cycle lengths (fixed points included), sorted descending.
  std::vector<std::size_t> cycle_type() const;

  std::uint64_t order() const;
  int sign() const;

  /// Smallest moved point, or degree() for the identity.
  Point smallest_moved_point() const noexcept;

  /// 1-based disjoint cycle notation; the identity prints as "()".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// result[w] = q[p[w]].
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// g^s = s^-1 g s.
Permutation conjugate(const Permutation& g, const Permutation& s);

/// [g, h] = g^-1 h^-1 g h.
Permutation commutator(const Permutation& g, const Permutation& h);

Permutation power(const Permutation& g, std::int64_t exponent);

/// Parses one permutation in 1-based cycle notation, e.g. "(1,2,3)(4,5)" or "()".
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Parses a comma separated list of cycle-notation permutations,
/// e.g. "(1,2,3,4),(1,3)". An empty string yields no permutations.
std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree);

std::string to_string(std::span<const Permutation> perms);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace permorbit
