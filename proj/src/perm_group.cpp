#include "permorbit/perm_group.hpp"

#include <algorithm>
#include <mutex>

namespace permorbit {

struct PermutationGroup::Cache {
  std::once_flag chain_once;
  StabilizerChain chain;
  std::once_flag finite_once;
  FiniteGroupPtr finite;
  std::exception_ptr finite_error;
};

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
  if (degree == 0) throw PermutationError("permutation group degree must be positive");
  for (Permutation& g : generators) {
    if (g.degree() != degree) throw PermutationError("generator degree mismatch");
    if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end()) {
      generators_.push_back(std::move(g));
    }
  }
}

const StabilizerChain& PermutationGroup::chain() const {
  std::call_once(cache_->chain_once,
                 [this] { cache_->chain = StabilizerChain::build(degree_, generators_); });
  return cache_->chain;
}

std::uint64_t PermutationGroup::order_u64() const {
  mpz_class n = order();
  if (!n.fits_slong_p()) throw CapExceeded("group order does not fit in 64 bits");
  return static_cast<std::uint64_t>(n.get_si());
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw PermutationError("contains: degree mismatch");
  return chain().contains(p);
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) const {
  mpz_class n = order();
  if (n > mpz_class(std::to_string(cap))) {
    throw CapExceeded("group order " + n.get_str() + " exceeds element cap " + std::to_string(cap));
  }
  std::vector<Permutation> current{Permutation(degree_)};
  const auto& levels = chain().levels();
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(current.size() * it->transversal.size());
    for (const Permutation& x : current) {
      for (const Permutation& u : it->transversal) next.push_back(x * u);
    }
    current = std::move(next);
  }
  return current;
}

FiniteGroupPtr PermutationGroup::finite() const {
  std::call_once(cache_->finite_once, [this] {
    try {
      if (order() > FiniteGroup::kMaxOrder) {
        throw CapExceeded("group order " + order().get_str() + " exceeds table cap " +
                          std::to_string(FiniteGroup::kMaxOrder));
      }
      cache_->finite =
          std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(degree_, generators_));
    } catch (...) {
      cache_->finite_error = std::current_exception();
    }
  });
  if (cache_->finite_error) std::rethrow_exception(cache_->finite_error);
  return cache_->finite;
}

std::vector<Point> PermutationGroup::orbit(Point p) const {
  if (p >= degree_) throw PermutationError("orbit: point out of domain");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{p};
  seen[p] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Permutation& g : generators_) {
      Point q = g[out[i]];
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(degree_, 0);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (Point q : o) seen[q] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermutationGroup::is_transitive() const { return orbit(0).size() == degree_; }

bool PermutationGroup::is_regular() const {
  return is_transitive() && order() == static_cast<unsigned long>(degree_);
}

SubgroupHandle make_subgroup(const PermutationGroup& parent, std::vector<Permutation> generators) {
  for (const Permutation& g : generators) {
    if (!parent.contains(g)) {
      throw std::invalid_argument("subgroup generator " + g.to_string() + " is not in the parent");
    }
  }
  return {parent, PermutationGroup(parent.degree(), std::move(generators))};
}

SubgroupHandle point_stabilizer(const PermutationGroup& g, Point p) {
  if (p >= g.degree()) throw PermutationError("point_stabilizer: point out of domain");
  StabilizerChain chain = StabilizerChain::build(g.degree(), g.generators(), {p});
  std::vector<Permutation> gens;
  if (chain.levels().size() > 1) gens = chain.levels()[1].generators;
  return {g, PermutationGroup(g.degree(), std::move(gens))};
}

std::vector<Elem> element_indices(const PermutationGroup& g, const PermutationGroup& h) {
  FiniteGroupPtr fg = g.finite();
  std::vector<Elem> gens;
  for (const Permutation& x : h.generators()) {
    auto idx = fg->index_of(x);
    if (!idx) throw std::invalid_argument("element " + x.to_string() + " is not in the group");
    gens.push_back(*idx);
  }
  return fg->closure(gens);
}

PermutationGroup subgroup_from_indices(const PermutationGroup& g, const std::vector<Elem>& elems) {
  FiniteGroupPtr fg = g.finite();
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  for (Elem x : elems) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = fg->closure(gens);
  }
  std::vector<Permutation> perms;
  for (Elem x : gens) perms.push_back(fg->permutation(x));
  return PermutationGroup(g.degree(), std::move(perms));
}

bool core_is_trivial(const PermutationGroup& g, const SubgroupHandle& h) {
  FiniteGroupPtr fg = g.finite();
  return fg->core(element_indices(g, h.group)).size() == 1;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermutationGroup& g) {
  FiniteGroupPtr fg = g.finite();
  std::vector<std::vector<Permutation>> out;
  for (const auto& cls : fg->conjugacy_classes()) {
    std::vector<Permutation> c;
    for (Elem x : cls) c.push_back(fg->permutation(x));
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<Permutation> subgroup_transporter(const PermutationGroup& g,
                                                const PermutationGroup& h,
                                                const PermutationGroup& k) {
  FiniteGroupPtr fg = g.finite();
  std::vector<Elem> hs = element_indices(g, h);
  std::vector<Elem> ks = element_indices(g, k);
  if (hs.size() != ks.size()) return std::nullopt;
  std::vector<char> in_k(fg->order(), 0);
  for (Elem x : ks) in_k[x] = 1;
  std::vector<Elem> hgens;
  for (const Permutation& x : h.generators()) hgens.push_back(*fg->index_of(x));
  for (std::size_t t = 0; t < fg->order(); ++t) {
    bool ok = std::all_of(hgens.begin(), hgens.end(),
                          [&](Elem x) { return in_k[fg->conj(x, static_cast<Elem>(t))] != 0; });
    if (ok) return fg->permutation(static_cast<Elem>(t));
  }
  return std::nullopt;
}

SubgroupHandle derived_subgroup(const PermutationGroup& g) {
  return {g, subgroup_from_indices(g, g.finite()->derived_subgroup())};
}

std::vector<PermutationGroup> derived_series(const PermutationGroup& g) {
  std::vector<PermutationGroup> series{g};
  while (true) {
    const PermutationGroup& last = series.back();
    PermutationGroup next = subgroup_from_indices(last, last.finite()->derived_subgroup());
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_soluble(const PermutationGroup& g) { return derived_series(g).back().order() == 1; }

SubgroupHandle centre(const PermutationGroup& g) {
  return {g, subgroup_from_indices(g, g.finite()->centre())};
}

std::uint64_t exponent(const PermutationGroup& g) { return g.finite()->exponent(); }

}  // namespace permorbit
