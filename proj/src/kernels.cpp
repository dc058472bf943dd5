#include "permorbit/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace permorbit::kernels {

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw std::out_of_range("factorial: n too large");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation unrank_permutation(std::size_t n, std::uint64_t rank) {
  std::vector<Point> pool(n);
  std::iota(pool.begin(), pool.end(), Point{0});
  std::vector<Point> images;
  images.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    std::uint64_t f = factorial(i - 1);
    std::size_t digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    images.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(images));
}

namespace {

bool normalises(const FiniteGroup& group, const std::vector<Permutation>& gens,
                const std::vector<Point>& s, std::vector<Point>& scratch) {
  const std::size_t n = s.size();
  for (const Permutation& g : gens) {
    // s^-1 g s sends s[w] to s[g[w]].
    for (std::size_t w = 0; w < n; ++w) scratch[s[w]] = s[g[static_cast<Point>(w)]];
    if (!group.index_of(Permutation(scratch))) return false;
  }
  return true;
}

void scan_range(const FiniteGroup& group, const std::vector<Permutation>& gens, std::size_t n,
                std::uint64_t begin, std::uint64_t end, std::vector<Permutation>& out) {
  if (begin >= end) return;
  std::vector<Point> s = unrank_permutation(n, begin).images();
  std::vector<Point> scratch(n);
  for (std::uint64_t r = begin; r < end; ++r) {
    if (normalises(group, gens, s, scratch)) out.emplace_back(s);
    std::next_permutation(s.begin(), s.end());
  }
}

}  // namespace

std::vector<Permutation> normaliser_scan_serial(const FiniteGroup& group,
                                                const std::vector<Permutation>& gens) {
  const std::size_t n = group.degree();
  std::vector<Permutation> out;
  scan_range(group, gens, n, 0, factorial(n), out);
  return out;
}

std::vector<Permutation> normaliser_scan_parallel(const FiniteGroup& group,
                                                  const std::vector<Permutation>& gens) {
  const std::size_t n = group.degree();
  const std::uint64_t total = factorial(n);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 64);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<Permutation>> parts(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    scan_range(group, gens, n, begin, std::min(total, begin + chunk), parts[static_cast<std::size_t>(c)]);
  }
  std::vector<Permutation> out;
  for (auto& p : parts) {
    for (auto& s : p) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::uint32_t> orbit_lengths_serial(const std::vector<std::vector<Elem>>& maps,
                                                std::size_t n) {
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& m : maps) {
    for (std::size_t x = 0; x < n; ++x) {
      std::uint32_t a = find(static_cast<std::uint32_t>(x)), b = find(m[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> size(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++size[find(static_cast<std::uint32_t>(x))];
  std::vector<std::uint32_t> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = size[find(static_cast<std::uint32_t>(x))];
  return out;
}

std::vector<std::uint32_t> orbit_lengths_parallel(const std::vector<std::vector<Elem>>& maps,
                                                  std::size_t n) {
  std::vector<std::uint32_t> out(n, 0);
#pragma omp parallel
  {
    std::vector<std::uint32_t> stamp(n, UINT32_MAX);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(n); ++xi) {
      const auto x = static_cast<std::size_t>(xi);
      std::uint32_t count = 0;
      for (const auto& m : maps) {
        if (stamp[m[x]] != x) {
          stamp[m[x]] = static_cast<std::uint32_t>(x);
          ++count;
        }
      }
      out[x] = count;
    }
  }
  return out;
}

}  // namespace permorbit::kernels
