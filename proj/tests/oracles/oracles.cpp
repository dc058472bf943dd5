#include "oracles/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace oracle {

Images compose(const Images& p, const Images& q) {
  Images r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::set<Images> closure(std::size_t degree, const std::vector<Images>& gens, std::size_t cap) {
  Images id(degree);
  std::iota(id.begin(), id.end(), 0U);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const Images& x : frontier) {
      for (const Images& g : gens) {
        Images y = compose(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw std::runtime_error("closure oracle cap exceeded");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

namespace {

std::vector<std::uint32_t> orders(const Table& t) {
  std::vector<std::uint32_t> ord(t.n, 1);
  for (std::uint32_t a = 1; a < t.n; ++a) {
    std::uint32_t x = a, k = 1;
    while (x != 0) {
      x = t(x, a);
      ++k;
    }
    ord[a] = k;
  }
  return ord;
}

struct AutCounter {
  const Table& t;
  std::vector<std::uint32_t> ord;
  std::vector<std::int64_t> phi;
  std::vector<char> used;
  std::size_t count = 0;

  bool consistent(std::uint32_t x) const {
    for (std::uint32_t a = 0; a <= x; ++a) {
      std::uint32_t ax = t(a, x), xa = t(x, a);
      auto pa = static_cast<std::uint32_t>(phi[a]), px = static_cast<std::uint32_t>(phi[x]);
      if (ax <= x && static_cast<std::uint32_t>(phi[ax]) != t(pa, px)) return false;
      if (xa <= x && static_cast<std::uint32_t>(phi[xa]) != t(px, pa)) return false;
    }
    return true;
  }

  void search(std::uint32_t x) {
    if (x == t.n) {
      ++count;
      return;
    }
    for (std::uint32_t y = 1; y < t.n; ++y) {
      if (used[y] || ord[y] != ord[x]) continue;
      phi[x] = y;
      used[y] = 1;
      if (consistent(x)) search(x + 1);
      used[y] = 0;
      phi[x] = -1;
    }
  }
};

std::optional<std::vector<std::int64_t>> extend(const Table& t,
                                                const std::vector<std::uint32_t>& gens,
                                                const std::vector<std::uint32_t>& images) {
  std::vector<std::int64_t> phi(t.n, -1);
  phi[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::uint32_t x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::uint32_t z = t(x, gens[k]);
      auto v = static_cast<std::int64_t>(t(static_cast<std::uint32_t>(phi[x]), images[k]));
      if (phi[z] < 0) {
        phi[z] = v;
        queue.push_back(z);
      } else if (phi[z] != v) {
        return std::nullopt;
      }
    }
  }
  std::vector<char> hit(t.n, 0);
  for (std::int64_t v : phi) {
    if (v < 0) continue;
    if (hit[static_cast<std::size_t>(v)]) return std::nullopt;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return phi;
}

}  // namespace

std::size_t count_automorphisms(const Table& t) {
  AutCounter c{t, orders(t), std::vector<std::int64_t>(t.n, -1), std::vector<char>(t.n, 0)};
  c.phi[0] = 0;
  c.used[0] = 1;
  c.search(1);
  return c.count;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++c;
  }
  return c;
}

std::vector<std::uint32_t> span(const Table& t, const std::vector<std::uint32_t>& gens) {
  std::vector<char> in(t.n, 0);
  std::vector<std::uint32_t> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::uint32_t g : gens) {
      std::uint32_t y = t(elems[i], g);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<std::uint32_t>> all_subgroups(const Table& t) {
  struct Sub {
    std::vector<std::uint32_t> elems;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Sub> cyclic;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint32_t x = 0; x < t.n; ++x) {
    auto s = span(t, {x});
    if (seen.insert(s).second) cyclic.push_back({s, {x}});
  }
  std::vector<Sub> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Sub& c : cyclic) {
      const auto& e = all[i].elems;
      if (std::binary_search(e.begin(), e.end(), c.gens[0])) continue;
      std::vector<std::uint32_t> gens = all[i].gens;
      gens.push_back(c.gens[0]);
      auto j = span(t, gens);
      if (seen.insert(j).second) all.push_back({std::move(j), std::move(gens)});
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& s : all) out.push_back(std::move(s.elems));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_nontrivial_automorphism_fixing(const Table& t, const std::vector<std::uint32_t>& fixed) {
  std::vector<std::uint32_t> base(fixed.begin(), fixed.end());
  std::vector<std::uint32_t> cur = span(t, base);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < t.n; ++x) {
    if (std::binary_search(cur.begin(), cur.end(), x)) continue;
    gens.push_back(x);
    std::vector<std::uint32_t> all = base;
    all.insert(all.end(), gens.begin(), gens.end());
    cur = span(t, all);
  }
  auto ord = orders(t);
  std::vector<std::uint32_t> images;

  std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
    std::vector<std::uint32_t> dom = base, img = base;
    dom.insert(dom.end(), gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i));
    img.insert(img.end(), images.begin(), images.end());
    auto phi = extend(t, dom, img);
    if (!phi) return false;
    if (i == gens.size()) {
      bool trivial = true;
      for (std::uint32_t x = 0; x < t.n; ++x) {
        if ((*phi)[x] != x) trivial = false;
      }
      if (trivial) return false;
      for (std::uint32_t a = 0; a < t.n; ++a) {
        for (std::uint32_t b = 0; b < t.n; ++b) {
          if ((*phi)[t(a, b)] != t(static_cast<std::uint32_t>((*phi)[a]), static_cast<std::uint32_t>((*phi)[b]))) {
            return false;
          }
        }
      }
      return true;
    }
    for (std::uint32_t y = 1; y < t.n; ++y) {
      if (ord[y] != ord[gens[i]]) continue;
      images.push_back(y);
      bool found = dfs(i + 1);
      images.pop_back();
      if (found) return true;
    }
    return false;
  };
  return dfs(0);
}

}  // namespace oracle
