#include "permorbit/finite_group.hpp"

#include <algorithm>
#include <numeric>

namespace permorbit {

void FiniteGroup::build_from_generator_products(std::vector<std::vector<Elem>> genmul) {
  order_ = genmul.size();
  const std::size_t n = order_;
  table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = &table_[a * n];
    row[0] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = genmul[row[parent_[b]]][parent_gen_[b]];
  }
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem* row = &table_[a * n];
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] == 0) {
        inverse_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  element_order_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::uint32_t k = 1;
    for (Elem x = static_cast<Elem>(a); x != 0; x = mul(x, static_cast<Elem>(a))) ++k;
    element_order_[a] = k;
  }
  compute_invariants();
}

void FiniteGroup::compute_invariants() {
  const std::size_t n = order_;
  class_of_.assign(n, UINT32_MAX);
  classes_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(classes_.size());
    std::vector<Elem> cls{static_cast<Elem>(x)};
    class_of_[x] = id;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Elem s : generators_) {
        Elem y = conj(cls[i], s);
        if (class_of_[y] == UINT32_MAX) {
          class_of_[y] = id;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  centre_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (classes_[class_of_[x]].size() == 1) centre_.push_back(static_cast<Elem>(x));
  }
  std::vector<Elem> comms;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      Elem c = commutator(generators_[i], generators_[j]);
      if (c != 0) comms.push_back(c);
    }
  }
  derived_ = normal_closure(comms);
  exponent_ = 1;
  for (std::size_t x = 0; x < n; ++x) exponent_ = std::lcm(exponent_, std::uint64_t(element_order_[x]));
}

Elem FiniteGroup::power(Elem a, std::int64_t e) const noexcept {
  std::int64_t m = element_order_[a];
  e %= m;
  if (e < 0) e += m;
  Elem r = 0;
  for (std::int64_t i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::max_class_size() const noexcept {
  std::size_t best = 0;
  for (const auto& c : classes_) best = std::max(best, c.size());
  return best;
}

std::vector<Elem> FiniteGroup::closure(const std::vector<Elem>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem g : gens) {
      Elem y = mul(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Elem> FiniteGroup::normal_closure(const std::vector<Elem>& gens) const {
  std::vector<Elem> list;
  for (Elem g : gens) {
    if (g != 0) list.push_back(g);
  }
  std::vector<Elem> k = closure(list);
  std::vector<char> in(order_, 0);
  for (Elem x : k) in[x] = 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Elem s : generators_) {
      Elem c = conj(list[i], s);
      if (in[c]) continue;
      list.push_back(c);
      k = closure(list);
      std::fill(in.begin(), in.end(), 0);
      for (Elem x : k) in[x] = 1;
    }
  }
  return k;
}

std::vector<Elem> FiniteGroup::core(const std::vector<Elem>& h) const {
  std::vector<char> in(order_, 0);
  for (Elem x : h) in[x] = 1;
  std::vector<Elem> current = h;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Elem> next;
    for (Elem x : current) {
      bool keep = std::all_of(generators_.begin(), generators_.end(),
                              [&](Elem s) { return in[conj(x, s)] != 0; });
      if (keep) {
        next.push_back(x);
      } else {
        changed = true;
      }
    }
    if (changed) {
      std::fill(in.begin(), in.end(), 0);
      for (Elem x : next) in[x] = 1;
    }
    current = std::move(next);
  }
  return current;
}

std::vector<Elem> FiniteGroup::conjugate_set(const std::vector<Elem>& h, Elem s) const {
  std::vector<Elem> out;
  out.reserve(h.size());
  for (Elem x : h) out.push_back(conj(x, s));
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_subgroup(const std::vector<Elem>& sorted_elements) const {
  if (sorted_elements.empty() || sorted_elements.front() != 0) return false;
  std::vector<char> in(order_, 0);
  for (Elem x : sorted_elements) in[x] = 1;
  for (Elem x : sorted_elements) {
    for (Elem y : sorted_elements) {
      if (!in[mul(x, y)]) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<Elem>& sorted_elements,
                                  std::vector<Elem>* embedding) const {
  std::vector<Elem> gens;
  std::vector<char> in(order_, 0);
  in[0] = 1;
  std::size_t covered = 1;
  for (Elem x : sorted_elements) {
    if (in[x]) continue;
    gens.push_back(x);
    std::vector<Elem> k = closure(gens);
    covered = k.size();
    for (Elem y : k) in[y] = 1;
  }
  if (covered != sorted_elements.size()) {
    throw std::invalid_argument("subgroup(): element list is not a subgroup");
  }
  std::vector<Elem> labels;
  FiniteGroup h = generate<Elem>(
      0, gens, [this](Elem a, Elem b) { return mul(a, b); }, kMaxOrder, &labels);
  if (has_permutations()) {
    h.degree_ = degree_;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      h.perms_.push_back(perms_[labels[i]]);
      h.perm_index_.emplace(perms_[labels[i]], static_cast<Elem>(i));
    }
  }
  if (embedding) *embedding = std::move(labels);
  return h;
}

FiniteGroup FiniteGroup::quotient(const std::vector<Elem>& normal_subgroup,
                                  std::vector<Elem>* projection) const {
  std::vector<Elem> rep(order_, 0);
  std::vector<char> done(order_, 0);
  for (std::size_t g = 0; g < order_; ++g) {
    if (done[g]) continue;
    // g is the least element of its coset since cosets are visited in order.
    for (Elem n : normal_subgroup) {
      Elem y = mul(static_cast<Elem>(g), n);
      rep[y] = static_cast<Elem>(g);
      done[y] = 1;
    }
  }
  std::vector<Elem> gens;
  for (Elem s : generators_) {
    if (rep[s] != 0) gens.push_back(rep[s]);
  }
  std::vector<Elem> labels;
  FiniteGroup q = generate<Elem>(
      0, gens, [&](Elem a, Elem b) { return rep[mul(a, b)]; }, kMaxOrder, &labels);
  if (projection) {
    std::vector<Elem> label_index(order_, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) label_index[labels[i]] = static_cast<Elem>(i);
    projection->assign(order_, 0);
    for (std::size_t g = 0; g < order_; ++g) (*projection)[g] = label_index[rep[g]];
  }
  return q;
}

std::optional<Elem> FiniteGroup::index_of(const Permutation& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Permutation> FiniteGroup::regular_generators() const {
  std::vector<Permutation> out;
  for (Elem g : generators_) {
    std::vector<Point> images(order_);
    for (std::size_t x = 0; x < order_; ++x) images[x] = mul(static_cast<Elem>(x), g);
    out.emplace_back(std::move(images));
  }
  return out;
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                           std::size_t cap) {
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw PermutationError("generator degree mismatch");
  }
  std::vector<Permutation> labels;
  auto product = [](const Permutation& a, const Permutation& b) { return a * b; };
  FiniteGroup g = generate<Permutation, decltype(product), PermutationHash>(
      Permutation(degree), gens, product, cap, &labels);
  g.degree_ = degree;
  g.perms_ = std::move(labels);
  for (std::size_t i = 0; i < g.perms_.size(); ++i) {
    g.perm_index_.emplace(g.perms_[i], static_cast<Elem>(i));
  }
  return g;
}

}  // namespace permorbit
