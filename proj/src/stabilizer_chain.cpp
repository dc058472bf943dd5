#include "permorbit/stabilizer_chain.hpp"

#include <algorithm>

namespace permorbit {

namespace {

bool fixes_all(const Permutation& g, const std::vector<Point>& points) {
  return std::all_of(points.begin(), points.end(), [&](Point p) { return g[p] == p; });
}

}  // namespace

void StabilizerChain::add_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.size() - 1);
}

void StabilizerChain::rebuild_orbit(std::size_t index) {
  Level& level = levels_[index];
  level.orbit.assign(1, level.base_point);
  level.rep_index.assign(degree_, -1);
  level.transversal.assign(1, Permutation(degree_));
  level.inverse_transversal.assign(1, Permutation(degree_));
  level.rep_index[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point beta = level.orbit[i];
    for (const Permutation& x : level.generators) {
      Point img = x[beta];
      if (level.rep_index[img] >= 0) continue;
      level.rep_index[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      Permutation u = level.transversal[i] * x;
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

StabilizerChain StabilizerChain::build(std::size_t degree,
                                       const std::vector<Permutation>& generators,
                                       const std::vector<Point>& base_prefix) {
  StabilizerChain chain;
  chain.degree_ = degree;
  std::vector<Permutation> gens;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw PermutationError("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  std::vector<Point> base;
  for (Point p : base_prefix) {
    if (p >= degree) throw PermutationError("base point out of domain");
    if (std::find(base.begin(), base.end(), p) == base.end()) base.push_back(p);
  }
  for (const Permutation& g : gens) {
    if (fixes_all(g, base)) base.push_back(g.smallest_moved_point());
  }
  // A degree-0 or trivial group still carries its base prefix levels.
  chain.levels_.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level;
    level.base_point = base[i];
    std::vector<Point> earlier(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(i));
    for (const Permutation& g : gens) {
      if (fixes_all(g, earlier)) level.generators.push_back(g);
    }
    chain.levels_.push_back(std::move(level));
    chain.rebuild_orbit(i);
  }

  // Holt's SCHREIERSIMS: work upwards from the deepest level, restarting at
  // the level where a new strong generator was inserted.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < chain.levels_[li].orbit.size() && !restarted; ++oi) {
      for (std::size_t gi = 0; gi < chain.levels_[li].generators.size(); ++gi) {
        const Level& level = chain.levels_[li];
        const Permutation& x = level.generators[gi];
        Point beta = level.orbit[oi];
        Point target = x[beta];
        Permutation h =
            level.transversal[oi] * x *
            level.inverse_transversal[static_cast<std::size_t>(level.rep_index[target])];
        if (h.is_identity()) continue;
        auto [y, j] = chain.sift(h, li + 1);
        if (j == chain.levels_.size() && y.is_identity()) continue;
        if (j == chain.levels_.size()) {
          Level fresh;
          fresh.base_point = y.smallest_moved_point();
          chain.levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          chain.levels_[l].generators.push_back(y);
          chain.rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return chain;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const Level& l : levels_) b.push_back(l.base_point);
  return b;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const Level& l : levels_) {
    for (const Permutation& g : l.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

mpz_class StabilizerChain::order() const {
  mpz_class n = 1;
  for (const Level& l : levels_) n *= static_cast<unsigned long>(l.orbit.size());
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g,
                                                          std::size_t first_level) const {
  if (g.degree() != degree_) throw PermutationError("sift: degree mismatch");
  Permutation h = g;
  for (std::size_t l = first_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    std::int32_t idx = level.rep_index[h[level.base_point]];
    if (idx < 0) return {h, l};
    h = h * level.inverse_transversal[static_cast<std::size_t>(idx)];
  }
  return {h, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  auto [residue, depth] = sift(g);
  return depth == levels_.size() && residue.is_identity();
}

}  // namespace permorbit
