#include "permorbit/automorphisms.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>

#include "permorbit/kernels.hpp"

namespace permorbit {

AutSet::AutSet(FiniteGroupPtr group, std::vector<std::vector<Elem>> maps)
    : group_(std::move(group)), maps_(std::move(maps)) {
  std::sort(maps_.begin(), maps_.end());
  maps_.erase(std::unique(maps_.begin(), maps_.end()), maps_.end());
}

bool AutSet::contains(const std::vector<Elem>& map) const {
  return std::binary_search(maps_.begin(), maps_.end(), map);
}

bool AutSet::contains_identity() const {
  std::vector<Elem> id(group_->order());
  std::iota(id.begin(), id.end(), Elem{0});
  return contains(id);
}

GroupMap AutSet::group_map(std::size_t i) const { return make_group_map(group_, group_, maps_.at(i)); }

bool AutSet::is_closed() const {
  if (!contains_identity()) return false;
  const std::size_t n = group_->order();
  std::vector<Elem> buf(n);
  for (const auto& a : maps_) {
    for (std::size_t x = 0; x < n; ++x) buf[a[x]] = static_cast<Elem>(x);
    if (!contains(buf)) return false;
  }
  // Closure under products of members with the first few members suffices
  // only for generating sets, so check all pairs.
  for (const auto& a : maps_) {
    for (const auto& b : maps_) {
      for (std::size_t x = 0; x < n; ++x) buf[x] = b[a[x]];
      if (!contains(buf)) return false;
    }
  }
  return true;
}

bool AutSet::is_subset_of(const AutSet& other) const {
  return std::all_of(maps_.begin(), maps_.end(), [&](const auto& m) { return other.contains(m); });
}

bool operator==(const AutSet& a, const AutSet& b) { return a.maps() == b.maps(); }

std::vector<ElementFingerprint> fingerprints(const FiniteGroup& g) {
  std::vector<Elem> proj;
  FiniteGroup q = g.quotient(g.derived_subgroup(), &proj);
  std::vector<ElementFingerprint> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto e = static_cast<Elem>(x);
    out[x] = {g.element_order(e), static_cast<std::uint32_t>(g.class_size(e)),
              q.element_order(proj[x])};
  }
  return out;
}

namespace {

bool find_tuple(const FiniteGroup& g, std::size_t d, std::vector<Elem>& prefix) {
  std::vector<Elem> span = g.closure(prefix);
  if (prefix.size() == d) return span.size() == g.order();
  if (span.size() == g.order()) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : span) in[x] = 1;
  if (prefix.empty()) {
    for (const auto& cls : g.conjugacy_classes()) {
      prefix.push_back(cls.front());
      if (find_tuple(g, d, prefix)) return true;
      prefix.pop_back();
    }
    return false;
  }
  // Entries after the second can be taken in increasing order.
  std::size_t start = prefix.size() >= 2 ? std::size_t(prefix.back()) + 1 : 1;
  for (std::size_t x = start; x < g.order(); ++x) {
    if (in[x]) continue;
    prefix.push_back(static_cast<Elem>(x));
    if (find_tuple(g, d, prefix)) return true;
    prefix.pop_back();
  }
  return false;
}

}  // namespace

GeneratingTuple min_generating_tuple(const FiniteGroup& g) {
  if (g.order() == 1) return {0, {}};
  for (std::size_t d = 1;; ++d) {
    std::vector<Elem> prefix;
    if (find_tuple(g, d, prefix)) return {d, prefix};
  }
}

namespace {

/// Scratch space for prefix checks; one per thread.
struct Extender {
  const FiniteGroup& src;
  const FiniteGroup& dst;
  std::vector<std::int32_t> phi;
  std::vector<std::uint32_t> phi_stamp;
  std::vector<std::uint32_t> hit_stamp;
  std::vector<Elem> queue;
  std::uint32_t stamp = 0;

  Extender(const FiniteGroup& s, const FiniteGroup& d)
      : src(s), dst(d), phi(s.order(), -1), phi_stamp(s.order(), 0), hit_stamp(d.order(), 0) {}

  /// Extends gens[i] -> images[i] (i < k) to the generated subgroup.
  bool extend(const std::vector<Elem>& gens, const std::vector<Elem>& images, std::size_t k,
              bool injective) {
    ++stamp;
    queue.clear();
    queue.push_back(0);
    phi[0] = 0;
    phi_stamp[0] = stamp;
    if (injective) hit_stamp[0] = stamp;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Elem x = queue[qi];
      Elem px = static_cast<Elem>(phi[x]);
      for (std::size_t j = 0; j < k; ++j) {
        Elem z = src.mul(x, gens[j]);
        Elem v = dst.mul(px, images[j]);
        if (phi_stamp[z] != stamp) {
          if (injective) {
            if (hit_stamp[v] == stamp) return false;
            hit_stamp[v] = stamp;
          }
          phi_stamp[z] = stamp;
          phi[z] = v;
          queue.push_back(z);
        } else if (phi[z] != v) {
          return false;
        }
      }
    }
    return true;
  }
};

bool dfs(Extender& ext, const std::vector<Elem>& gens,
         const std::vector<std::vector<Elem>>& candidates, std::vector<Elem>& images,
         const std::function<bool(const std::vector<Elem>&)>& visit, bool injective) {
  std::size_t i = images.size();
  if (i == gens.size()) {
    if (ext.queue.size() != ext.src.order()) return true;
    std::vector<Elem> full(ext.src.order());
    for (std::size_t x = 0; x < full.size(); ++x) full[x] = static_cast<Elem>(ext.phi[x]);
    return visit(full);
  }
  for (Elem y : candidates[i]) {
    images.push_back(y);
    if (ext.extend(gens, images, i + 1, injective)) {
      if (!dfs(ext, gens, candidates, images, visit, injective)) return false;
    }
    images.pop_back();
  }
  return true;
}

}  // namespace

bool search_homomorphisms(const FiniteGroup& src, const FiniteGroup& dst,
                          const std::vector<Elem>& gens,
                          const std::vector<std::vector<Elem>>& candidates,
                          const std::function<bool(const std::vector<Elem>&)>& visit, bool injective,
                          std::optional<std::size_t> first) {
  if (candidates.size() != gens.size()) throw std::invalid_argument("search_homomorphisms: size mismatch");
  Extender ext(src, dst);
  std::vector<Elem> images;
  if (gens.empty()) {
    ext.extend(gens, images, 0, injective);
    return dfs(ext, gens, candidates, images, visit, injective);
  }
  if (first) {
    images.push_back(candidates[0].at(*first));
    if (!ext.extend(gens, images, 1, injective)) return true;
    return dfs(ext, gens, candidates, images, visit, injective);
  }
  return dfs(ext, gens, candidates, images, visit, injective);
}

namespace {

std::vector<std::vector<Elem>> candidates_by_fingerprint(const FiniteGroup& src, const FiniteGroup& dst,
                                                         const std::vector<Elem>& gens) {
  auto fs = fingerprints(src);
  auto fd = fingerprints(dst);
  std::vector<std::vector<Elem>> out;
  for (Elem x : gens) {
    std::vector<Elem> c;
    for (std::size_t y = 0; y < dst.order(); ++y) {
      if (fd[y] == fs[x]) c.push_back(static_cast<Elem>(y));
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

AutSet automorphism_group(const FiniteGroupPtr& g, const AutOptions& options) {
  if (g->order() > options.order_cap) {
    throw CapExceeded("automorphism_group: |G| = " + std::to_string(g->order()) + " exceeds cap " +
                      std::to_string(options.order_cap));
  }
  const std::size_t cap = std::min(options.aut_cap, kHardAutCap);
  GeneratingTuple t = min_generating_tuple(*g);
  if (t.rank == 0) return AutSet(g, {{0}});
  auto candidates = candidates_by_fingerprint(*g, *g, t.tuple);
  const auto first_count = static_cast<std::int64_t>(candidates[0].size());
  std::vector<std::vector<std::vector<Elem>>> found(candidates[0].size());
  std::atomic<std::size_t> total{0};
  std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::int64_t c = 0; c < first_count; ++c) {
    if (overflow.load()) continue;
    auto& bucket = found[static_cast<std::size_t>(c)];
    search_homomorphisms(
        *g, *g, t.tuple, candidates,
        [&](const std::vector<Elem>& m) {
          if (total.fetch_add(1) + 1 > cap) {
            overflow.store(true);
            return false;
          }
          bucket.push_back(m);
          return true;
        },
        true, static_cast<std::size_t>(c));
  }
  if (overflow.load()) {
    throw CapExceeded("automorphism_group: more than " + std::to_string(cap) + " automorphisms");
  }
  std::vector<std::vector<Elem>> maps;
  maps.reserve(total.load());
  for (auto& b : found) {
    for (auto& m : b) maps.push_back(std::move(m));
  }
  return AutSet(g, std::move(maps));
}

AutSet automorphism_group(const PermutationGroup& g, const AutOptions& options) {
  return automorphism_group(g.finite(), options);
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  GeneratingTuple t = min_generating_tuple(a);
  if (t.rank == 0) return std::vector<Elem>{0};
  std::optional<std::vector<Elem>> result;
  search_homomorphisms(a, b, t.tuple, candidates_by_fingerprint(a, b, t.tuple),
                       [&](const std::vector<Elem>& m) {
                         result = m;
                         return false;
                       });
  return result;
}

std::optional<GroupMap> find_automorphism_fixing(const FiniteGroupPtr& g,
                                                 const std::vector<Elem>& fixed) {
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> candidates;
  std::vector<Elem> span{0};
  for (Elem x : fixed) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    candidates.push_back({x});
    span = g->closure(gens);
  }
  auto fp = fingerprints(*g);
  for (std::size_t x = 1; x < g->order(); ++x) {
    if (std::binary_search(span.begin(), span.end(), static_cast<Elem>(x))) continue;
    gens.push_back(static_cast<Elem>(x));
    std::vector<Elem> c;
    for (std::size_t y = 0; y < g->order(); ++y) {
      if (fp[y] == fp[x]) c.push_back(static_cast<Elem>(y));
    }
    candidates.push_back(std::move(c));
    span = g->closure(gens);
  }
  std::optional<GroupMap> result;
  search_homomorphisms(*g, *g, gens, candidates, [&](const std::vector<Elem>& m) {
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (m[x] != x) {
        result = make_group_map(g, g, m);
        return false;
      }
    }
    return true;
  });
  return result;
}

AutSet inner_automorphisms(const FiniteGroupPtr& g) {
  std::vector<std::vector<Elem>> maps;
  const std::size_t n = g->order();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Elem> m(n);
    for (std::size_t x = 0; x < n; ++x) m[x] = g->conj(static_cast<Elem>(x), static_cast<Elem>(s));
    maps.push_back(std::move(m));
  }
  return AutSet(g, std::move(maps));
}

std::vector<CentralHom> central_homomorphisms(const FiniteGroup& g) {
  std::vector<Elem> proj;
  FiniteGroup q = g.quotient(g.derived_subgroup(), &proj);
  std::vector<Elem> z_embed;
  FiniteGroup z = g.subgroup(g.centre(), &z_embed);
  GeneratingTuple t = min_generating_tuple(q);
  std::vector<std::vector<Elem>> candidates;
  for (Elem x : t.tuple) {
    std::vector<Elem> c;
    for (std::size_t y = 0; y < z.order(); ++y) {
      if (q.element_order(x) % z.element_order(static_cast<Elem>(y)) == 0) c.push_back(static_cast<Elem>(y));
    }
    candidates.push_back(std::move(c));
  }
  std::vector<CentralHom> out;
  search_homomorphisms(
      q, z, t.tuple, candidates,
      [&](const std::vector<Elem>& psi) {
        CentralHom f(g.order());
        for (std::size_t x = 0; x < g.order(); ++x) f[x] = z_embed[psi[proj[x]]];
        out.push_back(std::move(f));
        return true;
      },
      false);
  std::sort(out.begin(), out.end());
  return out;
}

AutSet central_automorphisms(const FiniteGroupPtr& g) {
  std::vector<std::vector<Elem>> maps;
  for (const CentralHom& f : central_homomorphisms(*g)) {
    bool inverts = std::any_of(g->centre().begin(), g->centre().end(),
                               [&](Elem z) { return z != 0 && f[z] == g->inv(z); });
    if (inverts) continue;
    std::vector<Elem> a(g->order());
    for (std::size_t x = 0; x < a.size(); ++x) a[x] = g->mul(static_cast<Elem>(x), f[x]);
    maps.push_back(std::move(a));
  }
  return AutSet(g, std::move(maps));
}

std::vector<std::uint64_t> power_map_exponents(const FiniteGroup& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t e_max = g.exponent();
  for (std::uint64_t e = 0; e < e_max; ++e) {
    if (e_max > 1 && std::gcd(e, e_max) != 1) continue;
    std::vector<Elem> m(g.order());
    for (std::size_t x = 0; x < m.size(); ++x) m[x] = g.power(static_cast<Elem>(x), static_cast<std::int64_t>(e));
    if (respects_generators(g, g, m) && is_bijection(m, g.order())) out.push_back(e);
  }
  return out;
}

AutSet power_map_automorphisms(const FiniteGroupPtr& g) {
  std::vector<std::vector<Elem>> maps;
  for (std::uint64_t e : power_map_exponents(*g)) {
    std::vector<Elem> m(g->order());
    for (std::size_t x = 0; x < m.size(); ++x) m[x] = g->power(static_cast<Elem>(x), static_cast<std::int64_t>(e));
    maps.push_back(std::move(m));
  }
  return AutSet(g, std::move(maps));
}

AutSet aut_perm(const PermutationGroup& g, const AutSet& full) {
  if (!g.is_transitive()) throw std::invalid_argument("aut_perm: group is not transitive");
  FiniteGroupPtr fg = g.finite();
  if (full.group() != fg) throw std::invalid_argument("aut_perm: automorphisms belong to another group");
  std::set<std::vector<Elem>> stabilizers;
  std::vector<Elem> s0;
  for (Point p = 0; p < g.degree(); ++p) {
    std::vector<Elem> s;
    for (std::size_t x = 0; x < fg->order(); ++x) {
      if (fg->permutation(static_cast<Elem>(x))[p] == p) s.push_back(static_cast<Elem>(x));
    }
    if (p == 0) s0 = s;
    stabilizers.insert(std::move(s));
  }
  std::vector<std::vector<Elem>> kept;
  std::vector<Elem> img(s0.size());
  for (const auto& m : full.maps()) {
    for (std::size_t i = 0; i < s0.size(); ++i) img[i] = m[s0[i]];
    std::sort(img.begin(), img.end());
    if (stabilizers.count(img)) kept.push_back(m);
  }
  return AutSet(fg, std::move(kept));
}

AutSet aut_perm(const PermutationGroup& g, const AutOptions& options) {
  if (!g.is_transitive()) throw std::invalid_argument("aut_perm: group is not transitive");
  return aut_perm(g, automorphism_group(g.finite(), options));
}

std::vector<Permutation> normaliser_in_symmetric_group(const PermutationGroup& g, bool parallel) {
  if (g.degree() > kMaxNormaliserScanDegree) {
    throw CapExceeded("normaliser scan: degree " + std::to_string(g.degree()) + " exceeds " +
                      std::to_string(kMaxNormaliserScanDegree));
  }
  FiniteGroupPtr fg = g.finite();
  return parallel ? kernels::normaliser_scan_parallel(*fg, g.generators())
                  : kernels::normaliser_scan_serial(*fg, g.generators());
}

AutSet aut_perm_via_normaliser(const PermutationGroup& g, bool parallel) {
  FiniteGroupPtr fg = g.finite();
  std::vector<std::vector<Elem>> maps;
  for (const Permutation& s : normaliser_in_symmetric_group(g, parallel)) {
    std::vector<Elem> m(fg->order());
    for (std::size_t x = 0; x < m.size(); ++x) {
      m[x] = *fg->index_of(conjugate(fg->permutation(static_cast<Elem>(x)), s));
    }
    maps.push_back(std::move(m));
  }
  return AutSet(fg, std::move(maps));
}

std::vector<std::uint32_t> element_orbit_lengths(const AutSet& auts, bool parallel) {
  const std::size_t n = auts.group()->order();
  return parallel ? kernels::orbit_lengths_parallel(auts.maps(), n)
                  : kernels::orbit_lengths_serial(auts.maps(), n);
}

std::map<std::uint32_t, std::uint32_t> orbit_length_multiset(const AutSet& auts, bool parallel) {
  std::map<std::uint32_t, std::uint32_t> elements_with_length;
  for (std::uint32_t len : element_orbit_lengths(auts, parallel)) ++elements_with_length[len];
  std::map<std::uint32_t, std::uint32_t> out;
  for (auto [len, count] : elements_with_length) out[len] = count / len;
  return out;
}

std::uint32_t max_orbit_length(const AutSet& auts, bool parallel) {
  auto lengths = element_orbit_lengths(auts, parallel);
  return *std::max_element(lengths.begin(), lengths.end());
}

std::uint32_t maol(const FiniteGroupPtr& g, const AutOptions& options) {
  return max_orbit_length(automorphism_group(g, options), options.parallel);
}

std::uint32_t maol_perm(const PermutationGroup& g, const AutOptions& options) {
  return max_orbit_length(aut_perm(g, options), options.parallel);
}

}  // namespace permorbit

namespace permorbit {

namespace {

std::vector<Elem> sylow_elements(const FiniteGroup& h, std::uint32_t p) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < h.order(); ++x) {
    std::uint32_t o = h.element_order(static_cast<Elem>(x));
    while (o % p == 0) o /= p;
    if (o == 1) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

/// Exponents e_1 >= ... >= e_r of an abelian p-group given as an element list.
std::vector<std::uint32_t> p_invariants(const FiniteGroup& h, const std::vector<Elem>& sylow,
                                        std::uint32_t p) {
  // at_least[k] = number of cyclic factors of order >= p^k, read off from the
  // sizes of the p^k-torsion subgroups.
  std::vector<std::uint32_t> exps;
  std::size_t prev = 1;
  std::uint64_t pk = 1;
  std::vector<std::uint32_t> at_least;
  while (prev < sylow.size()) {
    pk *= p;
    std::size_t n = std::count_if(sylow.begin(), sylow.end(),
                                  [&](Elem x) { return pk % h.element_order(x) == 0; });
    std::uint32_t r = 0;
    for (std::size_t q = n / prev; q > 1; q /= p) ++r;
    at_least.push_back(r);
    prev = n;
  }
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    std::uint32_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (std::uint32_t i = next; i < at_least[k]; ++i) exps.push_back(static_cast<std::uint32_t>(k + 1));
  }
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

std::vector<std::uint32_t> prime_divisors(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  return out;
}

std::uint32_t ipow(std::uint32_t p, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= p;
  return r;
}

/// Exponent k with x^k the p-component of x, for every x of an abelian h.
std::int64_t p_projector(std::size_t order, std::uint32_t p) {
  std::size_t pa = 1;
  while (order % (pa * p) == 0) pa *= p;
  const std::size_t m = order / pa;
  for (std::size_t k = 0; k < order; k += m) {
    if (k % pa == 1 % pa) return static_cast<std::int64_t>(k);
  }
  return 1;
}

bool extend_basis(const FiniteGroup& h, const std::vector<Elem>& sylow, std::uint32_t p,
                  const std::vector<std::uint32_t>& exps, std::vector<Elem>& prefix, std::size_t span) {
  if (prefix.size() == exps.size()) return true;
  const std::uint32_t want = ipow(p, exps[prefix.size()]);
  for (Elem x : sylow) {
    if (h.element_order(x) != want) continue;
    prefix.push_back(x);
    std::size_t s = h.closure(prefix).size();
    if (s == span * want && extend_basis(h, sylow, p, exps, prefix, s)) return true;
    prefix.pop_back();
  }
  return false;
}

bool is_p_basis(const FiniteGroup& h, const std::vector<Elem>& sylow, std::uint32_t p,
                const std::vector<Elem>& tuple) {
  auto exps = p_invariants(h, sylow, p);
  if (tuple.size() != exps.size()) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (h.element_order(tuple[i]) != ipow(p, exps[i])) return false;
  }
  return h.closure(tuple).size() == sylow.size();
}

std::size_t abelian_rank(const FiniteGroup& h) {
  std::size_t d = 0;
  for (std::uint32_t p : prime_divisors(h.order())) {
    d = std::max(d, p_invariants(h, sylow_elements(h, p), p).size());
  }
  return d;
}

}  // namespace

std::optional<std::vector<Elem>> abelian_p_basis(const FiniteGroup& g, const std::vector<Elem>& sylow,
                                                 std::uint32_t p) {
  auto exps = p_invariants(g, sylow, p);
  std::vector<Elem> prefix;
  if (!extend_basis(g, sylow, p, exps, prefix, 1)) return std::nullopt;
  return prefix;
}

std::vector<Elem> standard_generating_tuple(const FiniteGroup& h) {
  if (!h.is_abelian()) throw std::invalid_argument("standard_generating_tuple: group is not abelian");
  std::vector<Elem> tuple(abelian_rank(h), Elem{0});
  for (std::uint32_t p : prime_divisors(h.order())) {
    auto basis = abelian_p_basis(h, sylow_elements(h, p), p);
    if (!basis) throw std::logic_error("standard_generating_tuple: no basis found");
    for (std::size_t i = 0; i < basis->size(); ++i) tuple[i] = h.mul(tuple[i], (*basis)[i]);
  }
  return tuple;
}

bool is_standard_generating_tuple(const FiniteGroup& h, const std::vector<Elem>& tuple) {
  if (!h.is_abelian()) throw std::invalid_argument("is_standard_generating_tuple: group is not abelian");
  if (tuple.size() != abelian_rank(h)) return false;
  for (std::uint32_t p : prime_divisors(h.order())) {
    auto sylow = sylow_elements(h, p);
    const std::size_t r = p_invariants(h, sylow, p).size();
    const std::int64_t k = p_projector(h.order(), p);
    std::vector<Elem> head;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      Elem x = h.power(tuple[i], k);
      if (i < r) {
        head.push_back(x);
      } else if (x != 0) {
        return false;
      }
    }
    if (!is_p_basis(h, sylow, p, head)) return false;
  }
  return true;
}

bool is_standard_tuple(const FiniteGroup& g, const std::vector<Elem>& tuple) {
  std::vector<Elem> proj;
  FiniteGroup q = g.quotient(g.derived_subgroup(), &proj);
  std::vector<Elem> image;
  for (Elem x : tuple) image.push_back(proj.at(x));
  return is_standard_generating_tuple(q, image);
}

PacTuple pac_tuple(const FiniteGroup& g, const std::vector<Elem>& tuple) {
  std::vector<Elem> proj;
  FiniteGroup q = g.quotient(g.derived_subgroup(), &proj);
  std::vector<Elem> image;
  for (Elem x : tuple) image.push_back(proj.at(x));
  if (!is_standard_generating_tuple(q, image)) throw std::invalid_argument("pac_tuple: not a standard tuple");
  PacTuple out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    out.powers.push_back(g.power(tuple[i], q.element_order(image[i])));
    std::vector<Elem> c;
    for (Elem z : g.derived_subgroup()) c.push_back(g.conj(z, tuple[i]));
    out.conjugations.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) out.commutators.push_back(g.commutator(tuple[i], tuple[j]));
  }
  return out;
}

bool pac_equivalent(const FiniteGroup& g, const std::vector<Elem>& t1, const std::vector<Elem>& t2) {
  return pac_tuple(g, t1) == pac_tuple(g, t2);
}

}  // namespace permorbit
