#include "permorbit/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "permorbit/abelian.hpp"
#include "permorbit/automorphisms.hpp"
#include "permorbit/census.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/small_groups.hpp"

namespace permorbit::lemmas {

using nlohmann::json;
using abelian::AbelianGroup;
using abelian::Vec;

namespace {

std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n, std::uint32_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t k = std::min(n, max_part); k >= 1; --k) {
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::uint64_t upow(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= p;
  return r;
}

std::string describe(const std::vector<std::uint64_t>& factors) {
  std::string s;
  for (auto f : factors) s += (s.empty() ? "Z/" : " x Z/") + std::to_string(f);
  return s.empty() ? "1" : s;
}

}  // namespace

VerificationReport check_aut_perm_characterisation(const LemmaOptions& options) {
  Stopwatch clock;
  VerificationReport report("aut_perm characterisations");
  census::CensusOptions census_options{options.parallel};
  AutOptions aut_options;
  aut_options.parallel = options.parallel;
  for (std::size_t d = 1; d <= options.max_transitive_degree; ++d) {
    Stopwatch degree_clock;
    json mismatches = json::array();
    std::size_t compared = 0, skipped = 0;
    for (const auto& e : census::transitive_groups(d, census_options)) {
      if (e.order > aut_options.order_cap) {
        ++skipped;
        continue;
      }
      ++compared;
      if (!(aut_perm(e.representative, aut_options) == aut_perm_via_normaliser(e.representative, options.parallel))) {
        mismatches.push_back(to_string(e.representative.generators()));
      }
    }
    std::string detail = std::to_string(compared) + " transitive groups";
    if (skipped) detail += ", " + std::to_string(skipped) + " above the order cap skipped";
    report.expect_true("degree " + std::to_string(d) + ": stabilizer-mapping automorphisms = normaliser automorphisms",
                       mismatches.empty(), detail, mismatches.empty() ? json() : mismatches)
        .seconds = degree_clock.seconds();
  }
  Stopwatch regular_clock;
  AutOptions big = aut_options;
  big.aut_cap = kHardAutCap;
  json mismatches = json::array();
  std::size_t count = 0;
  for (const auto& c : small_group_catalog(options.max_regular_order)) {
    ++count;
    PermutationGroup reg = regular_representation(*c.group);
    if (!(aut_perm(reg, big) == automorphism_group(reg.finite(), big))) mismatches.push_back(c.name);
  }
  report.expect_true("regular groups of order <= " + std::to_string(options.max_regular_order) + ": aut_perm = Aut",
                     mismatches.empty(), std::to_string(count) + " groups", mismatches.empty() ? json() : mismatches)
      .seconds = regular_clock.seconds();
  report.set_seconds(clock.seconds());
  return report;
}

VerificationReport check_centraliser_criterion(const LemmaOptions& options) {
  Stopwatch clock;
  VerificationReport report("centraliser criterion for abelian groups");
  std::size_t pairs = 0, groups = 0;
  json failures = json::array();
  for (std::uint64_t n = 2; n <= options.max_centraliser_order; ++n) {
    for (const auto& factors : abelian::abelian_group_shapes(n)) {
      ++groups;
      auto a = AbelianGroup::from_cyclic_orders(factors);
      // The group as a table over element indices for the generic search.
      std::vector<std::uint64_t> gens;
      for (std::size_t i = 0; i < a.dimension(); ++i) gens.push_back(a.index(a.unit(i)));
      std::vector<std::uint64_t> labels;
      auto mul = [&](std::uint64_t x, std::uint64_t y) { return a.index(a.add(a.element(x), a.element(y))); };
      auto table = std::make_shared<const FiniteGroup>(
          FiniteGroup::generate<std::uint64_t>(0, gens, mul, FiniteGroup::kMaxOrder, &labels));
      std::vector<Elem> position(a.order());
      for (std::size_t e = 0; e < labels.size(); ++e) position[labels[e]] = static_cast<Elem>(e);

      // Subgroups by closing the cyclic subgroups under joins.
      std::set<std::vector<std::uint64_t>> subgroups;
      std::vector<std::pair<std::vector<std::uint64_t>, std::vector<Vec>>> queue;
      for (std::uint64_t x = 0; x < a.order(); ++x) {
        std::vector<Vec> g{a.element(x)};
        auto s = a.span(g);
        if (subgroups.insert(s).second) queue.push_back({s, g});
      }
      const std::size_t cyclic = queue.size();
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (std::size_t c = 0; c < cyclic; ++c) {
          const Vec& x = queue[c].second[0];
          if (std::binary_search(queue[i].first.begin(), queue[i].first.end(), a.index(x))) continue;
          auto g = queue[i].second;
          g.push_back(x);
          auto s = a.span(g);
          if (subgroups.insert(s).second) queue.push_back({s, g});
        }
      }
      for (const auto& [elems, b_gens] : queue) {
        if (elems.size() == a.order()) continue;
        ++pairs;
        auto result = abelian::aut_centralizer_is_trivial(a, b_gens);
        std::vector<Elem> fixed;
        for (std::uint64_t x : elems) fixed.push_back(position[x]);
        std::sort(fixed.begin(), fixed.end());
        const bool searched_trivial = !find_automorphism_fixing(table, fixed).has_value();
        bool ok = result.trivial == searched_trivial;
        if (ok && !result.trivial) {
          ok = result.witness && result.witness->is_automorphism(a) && !result.witness->is_identity(a);
          for (const Vec& g : b_gens) ok = ok && result.witness->apply(a, g) == g;
        }
        if (!ok && failures.size() < 20) {
          failures.push_back({{"A", describe(factors)}, {"B_order", elems.size()}, {"criterion", result.trivial},
                              {"search", searched_trivial}});
        }
      }
    }
  }
  report.expect_true("criterion matches search for all B < A, |A| <= " + std::to_string(options.max_centraliser_order),
                     failures.empty(),
                     std::to_string(pairs) + " pairs over " + std::to_string(groups) + " groups",
                     failures.empty() ? json() : failures);
  report.set_seconds(clock.seconds());
  return report;
}

namespace {

/// Rank over GF(p) of vectors given by their socle digits.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::uint64_t inv = 1;
    while (rows[rank][c] * inv % p != 1) ++inv;
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::uint64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k] % p) % p;
    }
    ++rank;
  }
  return rank;
}

struct SweepGroup {
  std::uint64_t p;
  AbelianGroup a;
  std::vector<std::uint64_t> socle_step;  // p^{e_i - 1}
};

/// Socle digits of an element of order dividing p.
std::vector<std::uint64_t> socle_digits(const SweepGroup& g, const Vec& v) {
  std::vector<std::uint64_t> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] / g.socle_step[i];
  return d;
}

/// Postconditions of adapted_basis for B spanned by the given socle rows.
bool adapted_ok(const SweepGroup& g, const std::vector<std::vector<std::uint64_t>>& rows) {
  const AbelianGroup& a = g.a;
  std::vector<Vec> b_gens;
  for (const auto& r : rows) {
    Vec v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i] * g.socle_step[i];
    b_gens.push_back(std::move(v));
  }
  const std::size_t dim = rank_mod_p(rows, g.p);
  auto res = abelian::adapted_basis(a, b_gens);
  if (res.basis.size() != a.dimension() || res.indices.size() != dim) return false;
  if (!std::is_sorted(res.indices.begin(), res.indices.end())) return false;
  std::vector<std::vector<std::uint64_t>> socle;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a.order_of(res.basis[i]) != a.moduli()[i]) return false;
    socle.push_back(socle_digits(g, a.scale(g.socle_step[i], res.basis[i])));
  }
  if (rank_mod_p(socle, g.p) != a.dimension()) return false;
  std::vector<std::vector<std::uint64_t>> joint = rows;
  for (std::size_t i : res.indices) joint.push_back(socle[i]);
  return rank_mod_p(joint, g.p) == dim;
}

/// Calls visit on the reduced row-echelon basis of every subspace of
/// GF(p)^r whose pivot set is `pivots`.
void for_each_echelon(std::uint64_t p, std::size_t r, const std::vector<std::size_t>& pivots,
                      const std::function<void(const std::vector<std::vector<std::uint64_t>>&)>& visit) {
  std::vector<std::vector<std::uint64_t>> rows(pivots.size(), std::vector<std::uint64_t>(r, 0));
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    rows[i][pivots[i]] = 1;
    for (std::size_t c = pivots[i] + 1; c < r; ++c) {
      if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.push_back({i, c});
    }
  }
  while (true) {
    visit(rows);
    std::size_t k = 0;
    for (; k < free.size(); ++k) {
      auto& v = rows[free[k].first][free[k].second];
      if (++v < p) break;
      v = 0;
    }
    if (k == free.size()) return;
  }
}

std::uint64_t subspace_count(std::uint64_t p, std::size_t r) {
  // Gaussian binomials via the recurrence [r, s] = [r-1, s-1] + p^s [r-1, s].
  std::vector<std::uint64_t> row{1};
  for (std::size_t n = 1; n <= r; ++n) {
    std::vector<std::uint64_t> next(n + 1, 1);
    for (std::size_t s = 1; s < n; ++s) next[s] = row[s - 1] + upow(p, s) * row[s];
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) total += v;
  return total;
}

}  // namespace

VerificationReport check_adapted_bases(const LemmaOptions& options) {
  Stopwatch clock;
  VerificationReport report("root-adapted bases");
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t p : {2ULL, 3ULL}) {
    const std::uint32_t max_k = p == 2 ? options.max_exponent_p2 : options.max_exponent_p3;
    std::size_t exhaustive_groups = 0, sampled_groups = 0;
    std::uint64_t checked = 0;
    json failures = json::array();
    Stopwatch prime_clock;
    for (std::uint32_t k = 1; k <= max_k; ++k) {
      for (const auto& part : partitions(k, k)) {
        SweepGroup g{p, AbelianGroup::p_group(p, part), {}};
        for (auto m : g.a.moduli()) g.socle_step.push_back(m / p);
        const std::size_t r = g.a.dimension();
        auto record = [&](const std::vector<std::vector<std::uint64_t>>& rows) {
          if (failures.size() < 20) failures.push_back({{"exponents", part}, {"rows", rows}});
        };
        if (subspace_count(p, r) <= options.exhaustive_limit) {
          ++exhaustive_groups;
          // One task per pivot set; failures are merged in pivot-set order.
          const auto masks = static_cast<std::int64_t>(1ULL << r);
          std::vector<std::uint64_t> counts(static_cast<std::size_t>(masks), 0);
          std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> bad(static_cast<std::size_t>(masks));
#pragma omp parallel for schedule(dynamic) if (options.parallel)
          for (std::int64_t mask = 0; mask < masks; ++mask) {
            std::vector<std::size_t> pivots;
            for (std::size_t c = 0; c < r; ++c) {
              if (mask >> c & 1) pivots.push_back(c);
            }
            for_each_echelon(p, r, pivots, [&](const std::vector<std::vector<std::uint64_t>>& rows) {
              ++counts[static_cast<std::size_t>(mask)];
              if (!adapted_ok(g, rows) && bad[static_cast<std::size_t>(mask)].size() < 20) {
                bad[static_cast<std::size_t>(mask)].push_back(rows);
              }
            });
          }
          std::uint64_t seen = 0;
          for (std::size_t m = 0; m < counts.size(); ++m) {
            seen += counts[m];
            for (const auto& rows : bad[m]) record(rows);
          }
          checked += seen;
          if (seen != subspace_count(p, r)) record({});
        } else {
          ++sampled_groups;
          for (std::size_t t = 0; t < options.sample_size; ++t) {
            std::vector<std::vector<std::uint64_t>> rows(rng() % (r + 1), std::vector<std::uint64_t>(r));
            for (auto& row : rows) {
              for (auto& v : row) v = rng() % p;
            }
            ++checked;
            if (!adapted_ok(g, rows)) record(rows);
          }
        }
      }
    }
    std::string detail = std::to_string(checked) + " subgroups; " + std::to_string(exhaustive_groups) +
                         " groups exhaustive";
    if (sampled_groups) detail += ", " + std::to_string(sampled_groups) + " sampled";
    report.expect_true("p = " + std::to_string(p) + ", |A| <= " + std::to_string(p) + "^" + std::to_string(max_k),
                       failures.empty(), detail, failures.empty() ? json() : failures)
        .seconds = prime_clock.seconds();
  }
  report.set_seconds(clock.seconds());
  return report;
}

VerificationReport check_non_elementary_counterexample() {
  VerificationReport report("non-elementary subgroup has no root-adapted basis");
  for (std::uint64_t p : {2ULL, 3ULL}) {
    auto a = AbelianGroup::p_group(p, {3, 1});
    const Vec b = a.add(a.scale(p, a.unit(0)), a.unit(1));
    bool rejected = false;
    try {
      abelian::adapted_basis(a, {b});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    std::vector<Vec> b_generators;
    for (std::uint64_t x : a.span({b})) {
      if (a.order_of(a.element(x)) == p * p) b_generators.push_back(a.element(x));
    }
    std::size_t bases = 0;
    json root;
    for (std::uint64_t x = 0; x < a.order() && root.is_null(); ++x) {
      for (std::uint64_t y = 0; y < a.order() && root.is_null(); ++y) {
        std::vector<Vec> basis{a.element(x), a.element(y)};
        if (!abelian::basis_check(a, basis)) continue;
        ++bases;
        for (const Vec& entry : basis) {
          for (const Vec& gen : b_generators) {
            for (std::uint64_t k = 0; k <= 3; ++k) {
              if (a.scale(upow(p, k), entry) == gen) root = {{"basis", {basis[0], basis[1]}}, {"power", k}};
            }
          }
        }
      }
    }
    const std::string name = "Z/" + std::to_string(p * p * p) + " x Z/" + std::to_string(p);
    report.expect_true(name + ": adapted_basis rejects B", rejected);
    report.expect_true(name + ": no basis entry has a power generating B", root.is_null() && bases > 0,
                       std::to_string(bases) + " bases", root);
  }
  return report;
}

VerificationReport run_all(const LemmaOptions& options) {
  Stopwatch clock;
  VerificationReport report("lemma suites");
  report.merge(check_aut_perm_characterisation(options), "aut_perm: ");
  report.merge(check_centraliser_criterion(options), "centraliser: ");
  report.merge(check_adapted_bases(options), "adapted basis: ");
  report.merge(check_non_elementary_counterexample(), "counterexample: ");
  report.set_seconds(clock.seconds());
  return report;
}

}  // namespace permorbit::lemmas
