#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "permorbit/permutation.hpp"

namespace permorbit {

/// Index of an element of a FiniteGroup; 0 is always the identity.
using Elem = std::uint16_t;

/// Raised when an enumeration would exceed a declared cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group held as a Cayley table over element indices 0..|G|-1.
///
/// Elements are numbered in breadth-first order from the identity over the
/// generators, so the numbering is reproducible. Groups built from
/// permutations keep the permutation of every element.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 5040;

  /// Enumerates the group generated by `gens` under `mul`, which must be an
  /// associative product on T with two-sided identity `identity`.
  template <class T, class Mul, class Hash = std::hash<T>>
  static FiniteGroup generate(const T& identity, const std::vector<T>& gens, Mul mul,
                              std::size_t cap = kMaxOrder, std::vector<T>* labels = nullptr);

  static FiniteGroup from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                       std::size_t cap = kMaxOrder);

  std::size_t order() const noexcept { return order_; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  Elem conj(Elem a, Elem s) const noexcept { return mul(mul(inv(s), a), s); }
  Elem commutator(Elem a, Elem b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem a, std::int64_t e) const noexcept;
  std::uint32_t element_order(Elem a) const noexcept { return element_order_[a]; }

  const std::vector<Elem>& generators() const noexcept { return generators_; }
  /// For element b != 1: b = mul(parent(b), generators()[parent_generator(b)]).
  Elem parent(Elem b) const noexcept { return parent_[b]; }
  std::uint32_t parent_generator(Elem b) const noexcept { return parent_gen_[b]; }

  const std::vector<std::vector<Elem>>& conjugacy_classes() const noexcept { return classes_; }
  std::uint32_t class_of(Elem a) const noexcept { return class_of_[a]; }
  std::size_t class_size(Elem a) const noexcept { return classes_[class_of_[a]].size(); }
  std::size_t max_class_size() const noexcept;

  /// Sorted element lists.
  const std::vector<Elem>& centre() const noexcept { return centre_; }
  const std::vector<Elem>& derived_subgroup() const noexcept { return derived_; }
  bool is_abelian() const noexcept { return centre_.size() == order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  /// Sorted elements of the subgroup generated by `gens`.
  std::vector<Elem> closure(const std::vector<Elem>& gens) const;
  /// Sorted elements of the smallest normal subgroup containing `gens`.
  std::vector<Elem> normal_closure(const std::vector<Elem>& gens) const;
  /// Largest normal subgroup contained in the subgroup `h` (sorted).
  std::vector<Elem> core(const std::vector<Elem>& h) const;
  /// h^s as a sorted list.
  std::vector<Elem> conjugate_set(const std::vector<Elem>& h, Elem s) const;
  /// Members x of `subset` with the given generators; tests whether a sorted
  /// element list is closed under multiplication.
  bool is_subgroup(const std::vector<Elem>& sorted_elements) const;

  /// A sorted subgroup element list turned into a group of its own.
  /// `embedding[i]` is the element of *this for index i of the result.
  FiniteGroup subgroup(const std::vector<Elem>& sorted_elements,
                       std::vector<Elem>* embedding = nullptr) const;

  /// G/N for a normal subgroup N; `projection[g]` is the coset index of g.
  FiniteGroup quotient(const std::vector<Elem>& normal_subgroup,
                       std::vector<Elem>* projection = nullptr) const;

  bool has_permutations() const noexcept { return !perms_.empty(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& permutation(Elem a) const { return perms_.at(a); }
  std::optional<Elem> index_of(const Permutation& p) const;

  /// Right regular representation: point x goes to x*g.
  std::vector<Permutation> regular_generators() const;

 private:
  FiniteGroup() = default;
  void build_from_generator_products(std::vector<std::vector<Elem>> genmul);
  void compute_invariants();

  std::size_t order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::vector<Elem> generators_;
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<Elem> centre_;
  std::vector<Elem> derived_;
  std::uint64_t exponent_ = 1;

  std::size_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, Elem, PermutationHash> perm_index_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

template <class T, class Mul, class Hash>
FiniteGroup FiniteGroup::generate(const T& identity, const std::vector<T>& gens, Mul mul,
                                  std::size_t cap, std::vector<T>* labels) {
  cap = std::min(cap, kMaxOrder);
  std::vector<T> elems{identity};
  std::unordered_map<T, Elem, Hash> index;
  index.emplace(identity, 0);
  std::vector<std::vector<Elem>> genmul;
  FiniteGroup g;
  g.parent_.push_back(0);
  g.parent_gen_.push_back(0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<Elem> row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      T y = mul(elems[i], gens[k]);
      auto it = index.find(y);
      if (it == index.end()) {
        if (elems.size() >= cap) {
          throw CapExceeded("group order exceeds cap of " + std::to_string(cap));
        }
        it = index.emplace(y, static_cast<Elem>(elems.size())).first;
        elems.push_back(std::move(y));
        g.parent_.push_back(static_cast<Elem>(i));
        g.parent_gen_.push_back(static_cast<std::uint32_t>(k));
      }
      row[k] = it->second;
    }
    genmul.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < gens.size(); ++k) g.generators_.push_back(genmul[0][k]);
  g.build_from_generator_products(std::move(genmul));
  if (labels) *labels = std::move(elems);
  return g;
}

}  // namespace permorbit
