#include "permorbit/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace permorbit::abelian {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t p, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  // (p, -e, source) sorts coordinates by prime, then by descending exponent.
  std::vector<std::tuple<std::uint64_t, std::int64_t, std::size_t>> coords;
  long double total = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::uint64_t m = orders[i];
    if (m < 1) throw std::invalid_argument("abelian group: cyclic factor orders must be >= 1");
    total *= static_cast<long double>(m);
    if (total > static_cast<long double>(kMaxAbelianOrder)) {
      throw std::length_error("abelian group: order exceeds " + std::to_string(kMaxAbelianOrder));
    }
    for (std::uint64_t p = 2; m > 1; ++p) {
      std::int64_t e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e > 0) coords.emplace_back(p, -e, i);
    }
  }
  std::sort(coords.begin(), coords.end());
  AbelianGroup g;
  for (auto [p, neg_e, src] : coords) {
    auto e = static_cast<std::uint32_t>(-neg_e);
    if (g.components_.empty() || g.components_.back().p != p) g.components_.push_back({p, {}});
    g.components_.back().exponents.push_back(e);
    g.moduli_.push_back(ipow(p, e));
    g.primes_.push_back(p);
    g.source_factor_.push_back(src);
    g.order_ *= ipow(p, e);
  }
  return g;
}

AbelianGroup AbelianGroup::p_group(std::uint64_t p, std::vector<std::uint32_t> exponents) {
  if (!is_prime(p)) throw std::invalid_argument("abelian p-group: " + std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> orders;
  for (std::uint32_t e : exponents) {
    if (e < 1) throw std::invalid_argument("abelian p-group: exponents must be >= 1");
    if (e > 63) throw std::length_error("abelian p-group: exponent too large");
    orders.push_back(ipow(p, e));
  }
  return from_cyclic_orders(orders);
}

Vec AbelianGroup::unit(std::size_t i) const {
  Vec v = zero();
  v.at(i) = 1 % moduli_[i];
  return v;
}

Vec AbelianGroup::add(const Vec& a, const Vec& b) const {
  Vec r(dimension());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
  return r;
}

void AbelianGroup::add_to(Vec& a, const Vec& b) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += b[i];
    if (a[i] >= moduli_[i]) a[i] -= moduli_[i];
  }
}

Vec AbelianGroup::neg(const Vec& a) const {
  Vec r(dimension());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (moduli_[i] - a[i]) % moduli_[i];
  return r;
}

Vec AbelianGroup::scale(std::uint64_t k, const Vec& a) const {
  Vec r(dimension());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (k % moduli_[i]) * a[i] % moduli_[i];
  return r;
}

std::uint64_t AbelianGroup::order_of(const Vec& a) const {
  // Orders of the coordinates multiply across primes and take the maximum
  // within one prime.
  std::map<std::uint64_t, std::uint64_t> per_prime;
  for (std::size_t i = 0; i < dimension(); ++i) {
    std::uint64_t k = 1;
    if (a[i] % moduli_[i] != 0) {
      k = moduli_[i];
      for (std::uint64_t v = a[i]; v % primes_[i] == 0; v /= primes_[i]) k /= primes_[i];
    }
    per_prime[primes_[i]] = std::max(per_prime[primes_[i]], k);
  }
  std::uint64_t o = 1;
  for (auto [p, k] : per_prime) o *= k;
  return o;
}

bool AbelianGroup::contains(const Vec& a) const {
  if (a.size() != dimension()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= moduli_[i]) return false;
  }
  return true;
}

Vec AbelianGroup::from_cyclic(const std::vector<std::uint64_t>& residues) const {
  Vec v(dimension());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = residues.at(source_factor_[i]) % moduli_[i];
  return v;
}

Vec AbelianGroup::p_part(const Vec& a, std::uint64_t p) const {
  Vec v = zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (primes_[i] == p) v[i] = a[i];
  }
  return v;
}

std::uint64_t AbelianGroup::index(const Vec& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < dimension(); ++i) idx = idx * moduli_[i] + a[i];
  return idx;
}

Vec AbelianGroup::element(std::uint64_t index) const {
  Vec v(dimension());
  for (std::size_t i = dimension(); i-- > 0;) {
    v[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return v;
}

std::vector<std::uint64_t> AbelianGroup::span(const std::vector<Vec>& gens) const {
  std::vector<char> seen(order_, 0);
  std::vector<std::uint64_t> out{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < out.size(); ++qi) {
    const Vec x = element(out[qi]);
    Vec y_vec(x.size());
    for (const Vec& g : gens) {
      y_vec = x;
      add_to(y_vec, g);
      std::uint64_t y = index(y_vec);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool basis_check(const AbelianGroup& a, const std::vector<Vec>& tuple) {
  if (!a.is_p_group()) return false;
  if (tuple.size() != a.dimension()) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!a.contains(tuple[i]) || a.order_of(tuple[i]) != a.moduli()[i]) return false;
  }
  // Count distinct combinations, stepping the coefficients like an odometer.
  std::vector<char> seen(a.order(), 0);
  Vec coeff(tuple.size(), 0);
  Vec sum = a.zero();
  while (true) {
    std::uint64_t idx = a.index(sum);
    if (seen[idx]) return false;
    seen[idx] = 1;
    std::size_t k = tuple.size();
    while (k > 0) {
      a.add_to(sum, tuple[k - 1]);
      if (++coeff[k - 1] < a.moduli()[k - 1]) break;
      coeff[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return true;
}

namespace {

void check_members(const AbelianGroup& a, const std::vector<Vec>& gens) {
  for (const Vec& g : gens) {
    if (!a.contains(g)) throw std::invalid_argument("subgroup generator is not an element of A");
  }
}

/// x^-1 mod m for x a unit mod m.
std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t m) {
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(x % m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((s0 % mm) + mm) % mm);
}

}  // namespace

AdaptedBasis adapted_basis(const AbelianGroup& a, const std::vector<Vec>& b_gens) {
  if (!a.is_p_group()) throw std::invalid_argument("adapted_basis: A is not a p-group");
  check_members(a, b_gens);
  const std::uint64_t p = a.components().empty() ? 1 : a.components()[0].p;
  for (const Vec& g : b_gens) {
    if (a.order_of(g) > p) throw std::invalid_argument("adapted_basis: B is not elementary abelian");
  }
  const std::size_t dim = a.dimension();
  const auto& mod = a.moduli();
  AdaptedBasis out;
  for (std::size_t i = 0; i < dim; ++i) out.basis.push_back(a.unit(i));
  std::vector<char> active(dim, 1);
  // Coordinates of the generators of the current projection of B, relative
  // to the current basis; entries at retired positions stay zero.
  std::vector<Vec> gens = b_gens;

  while (true) {
    auto it = std::find_if(gens.begin(), gens.end(), [](const Vec& y) {
      return std::any_of(y.begin(), y.end(), [](std::uint64_t v) { return v != 0; });
    });
    if (it == gens.end()) break;
    const Vec c = *it;

    // c has order p, so each coordinate c_j is a multiple of p^{e_j - 1}.
    // The smallest such e_j gives the height h of c; root = c / p^h
    // generates a cyclic direct factor and replaces basis entry j*.
    std::size_t j_star = dim;
    for (std::size_t j = 0; j < dim; ++j) {
      if (active[j] && c[j] != 0 && (j_star == dim || mod[j] < mod[j_star])) j_star = j;
    }
    const std::uint64_t ph = mod[j_star] / p;
    Vec root = a.zero();
    for (std::size_t j = 0; j < dim; ++j) {
      if (c[j] != 0) a.add_to(root, a.scale(c[j] / ph, out.basis[j]));
    }
    // x_{j*} = u^-1 (root - sum_{j != j*} (c_j / p^h) x_j) with u = c_{j*} / p^h.
    const std::uint64_t u_inv = inverse_mod(c[j_star] / ph, mod[j_star]);
    for (Vec& y : gens) {
      const std::uint64_t t = y[j_star] * u_inv % mod[j_star];
      if (t == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (j == j_star || c[j] == 0) continue;
        const std::uint64_t shift = t * (c[j] / ph) % mod[j];
        y[j] = (y[j] + mod[j] - shift) % mod[j];
      }
      // Projecting along <root> drops its coefficient t.
      y[j_star] = 0;
    }
    out.basis[j_star] = root;
    out.indices.push_back(j_star);
    active[j_star] = 0;
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

Vec AbelianMap::apply(const AbelianGroup& a, const Vec& x) const {
  Vec r = a.zero();
  for (std::size_t i = 0; i < x.size(); ++i) r = a.add(r, a.scale(x[i], unit_images[i]));
  return r;
}

bool AbelianMap::is_automorphism(const AbelianGroup& a) const {
  if (unit_images.size() != a.dimension()) return false;
  for (std::size_t i = 0; i < unit_images.size(); ++i) {
    if (!a.contains(unit_images[i])) return false;
    if (a.moduli()[i] % a.order_of(unit_images[i]) != 0) return false;
  }
  return a.span(unit_images).size() == a.order();
}

bool AbelianMap::is_identity(const AbelianGroup& a) const {
  for (std::size_t i = 0; i < unit_images.size(); ++i) {
    if (unit_images[i] != a.unit(i)) return false;
  }
  return true;
}

CentraliserResult aut_centralizer_is_trivial(const AbelianGroup& a, const std::vector<Vec>& b_gens) {
  check_members(a, b_gens);
  const auto b_idx = a.span(b_gens);
  if (b_idx.size() == a.order()) throw std::invalid_argument("aut_centralizer_is_trivial: B must be a proper subgroup");
  const std::uint64_t order_b = b_idx.size();
  if (order_b % 2 == 1 && a.order() == 2 * order_b) return {true, std::nullopt};

  // Pick a prime p with B_p < A_p and (|A_p|, |B_p|) != (2, 1).
  std::uint64_t p = 0;
  std::uint64_t order_bp = 0;
  for (const auto& comp : a.components()) {
    std::uint64_t ap = 1;
    for (std::uint32_t e : comp.exponents) ap *= ipow(comp.p, e);
    std::uint64_t bp = 0;
    for (std::uint64_t x : b_idx) {
      Vec v = a.element(x);
      if (a.p_part(v, comp.p) == v) ++bp;
    }
    if (bp < ap && !(ap == 2 && bp == 1)) {
      p = comp.p;
      order_bp = bp;
      break;
    }
  }
  if (p == 0) throw std::logic_error("aut_centralizer_is_trivial: no prime found");

  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a.primes()[i] == p) positions.push_back(i);
  }
  AbelianMap alpha;
  for (std::size_t i = 0; i < a.dimension(); ++i) alpha.unit_images.push_back(a.unit(i));

  if (order_bp == 1) {
    // A_p itself needs a nontrivial automorphism: inversion unless A_p is
    // elementary abelian of exponent 2, then a coordinate swap.
    if (p > 2 || a.moduli()[positions[0]] > 2) {
      for (std::size_t i : positions) alpha.unit_images[i] = a.neg(a.unit(i));
    } else {
      std::swap(alpha.unit_images[positions[0]], alpha.unit_images[positions[1]]);
    }
  } else {
    std::vector<Vec> h_gens;
    for (const Vec& g : b_gens) h_gens.push_back(a.p_part(g, p));
    // h0: the least element of order p in B_p.
    Vec h0;
    for (std::uint64_t x : a.span(h_gens)) {
      Vec v = a.element(x);
      if (a.order_of(v) == p) {
        h0 = v;
        break;
      }
    }
    // chi(x) = sum c_i x_i mod p, nonzero and vanishing on B_p.
    std::uint64_t combos = 1;
    for (std::size_t k = 0; k < positions.size(); ++k) combos *= p;
    Vec chi;
    for (std::uint64_t code = 1; code < combos && chi.empty(); ++code) {
      Vec c(positions.size());
      std::uint64_t rest = code;
      for (std::size_t k = positions.size(); k-- > 0;) {
        c[k] = rest % p;
        rest /= p;
      }
      bool vanishes = std::all_of(h_gens.begin(), h_gens.end(), [&](const Vec& h) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < positions.size(); ++k) s += c[k] * (h[positions[k]] % p);
        return s % p == 0;
      });
      if (vanishes) chi = std::move(c);
    }
    if (chi.empty()) throw std::logic_error("aut_centralizer_is_trivial: no character found");
    // x -> x + chi(x) h0.
    for (std::size_t k = 0; k < positions.size(); ++k) {
      std::size_t i = positions[k];
      alpha.unit_images[i] = a.add(a.unit(i), a.scale(chi[k], h0));
    }
  }

  bool fixes = std::all_of(b_gens.begin(), b_gens.end(), [&](const Vec& g) { return alpha.apply(a, g) == g; });
  if (!fixes || !alpha.is_automorphism(a) || alpha.is_identity(a)) {
    throw std::logic_error("aut_centralizer_is_trivial: witness failed verification");
  }
  return {false, alpha};
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

void partitions(std::uint32_t left, std::uint32_t cap, std::vector<std::uint32_t>& cur,
                std::vector<std::vector<std::uint32_t>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t k = std::min(left, cap); k >= 1; --k) {
    cur.push_back(k);
    partitions(left - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> abelian_group_shapes(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("abelian_group_shapes: n must be >= 1");
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (std::uint64_t p = 2; n > 1; ++p) {
    std::uint32_t e = 0;
    for (; n % p == 0; n /= p) ++e;
    if (e == 0) continue;
    std::vector<std::vector<std::uint32_t>> parts;
    std::vector<std::uint32_t> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& prefix : out) {
      for (const auto& part : parts) {
        auto shape = prefix;
        for (std::uint32_t k : part) {
          std::uint64_t q = 1;
          for (std::uint32_t i = 0; i < k; ++i) q *= p;
          shape.push_back(q);
        }
        next.push_back(std::move(shape));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace permorbit::abelian
