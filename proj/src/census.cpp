#include "permorbit/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "permorbit/abelian.hpp"
#include "permorbit/constructors.hpp"

namespace permorbit::census {

using nlohmann::json;

namespace {

struct ElemVecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Elem e : v) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

bool is_prime_power(std::uint32_t m) {
  if (m < 2) return false;
  std::uint32_t p = 2;
  while (m % p != 0) ++p;
  while (m % p == 0) m /= p;
  return m == 1;
}

struct Symmetric {
  std::size_t n = 0;
  PermutationGroup group;
  FiniteGroupPtr table;
  std::vector<Elem> prime_power;
  std::vector<std::uint32_t> cycle_code;
};

Symmetric make_symmetric(std::size_t n) {
  Symmetric s;
  s.n = n;
  s.group = symmetric_natural(n);
  s.table = s.group.finite();
  for (std::size_t e = 0; e < s.table->order(); ++e) {
    auto x = static_cast<Elem>(e);
    if (is_prime_power(s.table->element_order(x))) s.prime_power.push_back(x);
    std::uint32_t code = 0;
    for (std::size_t len : s.table->permutation(x).cycle_type()) code = code * 8 + static_cast<std::uint32_t>(len);
    s.cycle_code.push_back(code);
  }
  return s;
}

struct ClassRecord {
  std::vector<Elem> elements;
  std::vector<Elem> gens;
  std::vector<std::uint32_t> key;
};

/// Orbit lengths on points, then the histogram of cycle types.
std::vector<std::uint32_t> invariant_key(const Symmetric& s, const ClassRecord& r) {
  std::vector<std::uint32_t> root(s.n);
  std::iota(root.begin(), root.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (Elem g : r.gens) {
    const Permutation& p = s.table->permutation(g);
    for (Point x = 0; x < s.n; ++x) root[find(x)] = find(p[x]);
  }
  std::map<std::uint32_t, std::uint32_t> orbit_size, cycle_types;
  for (Point x = 0; x < s.n; ++x) ++orbit_size[find(x)];
  for (Elem e : r.elements) ++cycle_types[s.cycle_code[e]];
  std::vector<std::uint32_t> key;
  for (auto [root_point, size] : orbit_size) key.push_back(size);
  std::sort(key.begin(), key.end());
  key.push_back(0);
  for (auto [code, count] : cycle_types) {
    key.push_back(code);
    key.push_back(count);
  }
  return key;
}

/// <R, g> for one g of prime-power order in each double coset RgR other than R.
std::vector<ClassRecord> extensions(const Symmetric& s, const ClassRecord& r) {
  const FiniteGroup& t = *s.table;
  std::vector<char> marked(t.order(), 0);
  for (Elem x : r.elements) marked[x] = 1;
  std::unordered_set<std::vector<Elem>, ElemVecHash> local;
  std::vector<ClassRecord> out;
  std::vector<Elem> queue;
  for (Elem g : s.prime_power) {
    if (marked[g]) continue;
    queue.assign(1, g);
    marked[g] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Elem h : r.gens) {
        for (Elem y : {t.mul(h, queue[i]), t.mul(queue[i], h)}) {
          if (!marked[y]) {
            marked[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
    ClassRecord k;
    k.gens = r.gens;
    k.gens.push_back(g);
    k.elements = t.closure(k.gens);
    if (local.insert(k.elements).second) out.push_back(std::move(k));
  }
  return out;
}

}  // namespace

std::vector<SubgroupHandle> all_subgroups_up_to_conjugacy(std::size_t n, const CensusOptions& options) {
  if (n == 0) throw std::invalid_argument("subgroup census: degree must be positive");
  if (n > kMaxCensusDegree) {
    throw CapExceeded("subgroup census: degree " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxCensusDegree));
  }
  const Symmetric s = make_symmetric(n);
  const FiniteGroup& t = *s.table;

  // Every conjugate of every class found so far, so a candidate is new iff
  // its element set is absent.
  std::unordered_map<std::vector<Elem>, std::size_t, ElemVecHash> seen;
  std::vector<ClassRecord> classes;
  auto admit = [&](ClassRecord k) {
    if (seen.count(k.elements)) return false;
    for (std::size_t x = 0; x < t.order(); ++x) {
      seen.emplace(t.conjugate_set(k.elements, static_cast<Elem>(x)), classes.size());
    }
    k.key = invariant_key(s, k);
    classes.push_back(std::move(k));
    return true;
  };

  admit(ClassRecord{{0}, {}, {}});
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::vector<ClassRecord>> found(frontier.size());
    const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
    for (std::int64_t i = 0; i < count; ++i) found[i] = extensions(s, classes[frontier[i]]);
    std::vector<std::size_t> next;
    for (auto& batch : found) {
      for (auto& k : batch) {
        if (admit(std::move(k))) next.push_back(classes.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::size_t> order(classes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = classes[a];
    const auto& y = classes[b];
    if (x.elements.size() != y.elements.size()) return x.elements.size() < y.elements.size();
    return x.key < y.key;
  });
  std::vector<SubgroupHandle> out;
  for (std::size_t i : order) {
    std::vector<Permutation> gens;
    for (Elem g : classes[i].gens) gens.push_back(t.permutation(g));
    out.push_back({s.group, PermutationGroup(n, std::move(gens))});
  }
  return out;
}

std::uint64_t conjugacy_class_length(const SubgroupHandle& h) {
  FiniteGroupPtr t = h.parent.finite();
  const std::vector<Elem> elems = element_indices(h.parent, h.group);
  std::uint64_t normalising = 0;
  for (std::size_t x = 0; x < t->order(); ++x) {
    normalising += t->conjugate_set(elems, static_cast<Elem>(x)) == elems;
  }
  return t->order() / normalising;
}

std::uint32_t maol_perm_by_normaliser(const PermutationGroup& g, bool parallel) {
  // A few normalising permutations generate the normaliser; orbits under
  // those are the orbits of the whole normaliser.
  std::vector<Permutation> gens;
  PermutationGroup span(g.degree(), {});
  for (const Permutation& s : normaliser_in_symmetric_group(g, parallel)) {
    if (span.contains(s)) continue;
    gens.push_back(s);
    span = PermutationGroup(g.degree(), gens);
  }
  FiniteGroupPtr fg = g.finite();
  std::vector<char> seen(fg->order(), 0);
  std::uint32_t best = 0;
  std::vector<Elem> orbit;
  for (std::size_t x = 0; x < fg->order(); ++x) {
    if (seen[x]) continue;
    seen[x] = 1;
    orbit.assign(1, static_cast<Elem>(x));
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Permutation& s : gens) {
        Elem y = *fg->index_of(conjugate(fg->permutation(orbit[i]), s));
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    best = std::max(best, static_cast<std::uint32_t>(orbit.size()));
  }
  return best;
}

const std::vector<ListedGroup>& small_orbit_groups() {
  static const std::vector<ListedGroup> groups = [] {
    std::vector<ListedGroup> out;
    out.push_back({"Z/1 regular", cyclic_regular(1), 1});
    out.push_back({"Z/2 regular", cyclic_regular(2), 1});
    out.push_back({"Z/3 regular", cyclic_regular(3), 2});
    out.push_back({"Z/4 regular", cyclic_regular(4), 2});
    out.push_back({"Z/6 regular", cyclic_regular(6), 2});
    out.push_back({"(Z/2)^2 regular", abelian_regular({2, 2}), 3});
    out.push_back({"Sym(3) regular", regular_representation(*symmetric_natural(3).finite()), 3});
    out.push_back({"D_6 <= Sym(3)", dihedral_natural(3), 3});
    out.push_back({"D_8 <= Sym(4)", dihedral_natural(4), 2});
    out.push_back({"D_12 <= Sym(6)", dihedral_natural(6), 3});
    return out;
  }();
  return groups;
}

std::optional<std::string> listed_name(const PermutationGroup& g) {
  for (const auto& l : small_orbit_groups()) {
    if (l.group.degree() != g.degree() || l.group.order() != g.order()) continue;
    if (subgroup_transporter(symmetric_natural(g.degree()), l.group, g)) return l.name;
  }
  return std::nullopt;
}

std::vector<CensusEntry> transitive_groups(std::size_t degree, const CensusOptions& options) {
  std::vector<CensusEntry> out;
  for (const SubgroupHandle& h : all_subgroups_up_to_conjugacy(degree, options)) {
    if (!h.group.is_transitive()) continue;
    CensusEntry e;
    e.degree = degree;
    e.representative = h.group;
    e.order = h.group.order_u64();
    e.maol_perm = maol_perm_by_normaliser(h.group, options.parallel);
    e.soluble = is_soluble(h.group);
    e.name = listed_name(h.group);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

void check_degree(std::size_t max_degree) {
  if (max_degree == 0 || max_degree > kMaxCensusDegree) {
    throw std::invalid_argument("max degree must be in 1.." + std::to_string(kMaxCensusDegree));
  }
}

std::string describe(const CensusEntry& e) {
  return e.name ? *e.name : "unlisted degree " + std::to_string(e.degree) + " <" + to_string(e.representative.generators()) + ">";
}

}  // namespace

VerificationReport verify_orbit_length_classification(std::size_t max_degree, std::uint32_t threshold,
                                                      const CensusOptions& options) {
  check_degree(max_degree);
  Stopwatch clock;
  VerificationReport report("classification of transitive groups with maol_perm <= " + std::to_string(threshold));
  std::map<std::string, std::uint32_t> found;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    Stopwatch degree_clock;
    auto entries = transitive_groups(d, options);
    std::vector<std::string> survivors;
    json witness = json::array();
    for (const auto& e : entries) {
      if (e.maol_perm > threshold) continue;
      survivors.push_back(describe(e));
      witness.push_back({{"group", describe(e)}, {"generators", to_string(e.representative.generators())},
                         {"maol_perm", e.maol_perm}});
      if (e.name) found[*e.name] = e.maol_perm;
    }
    std::sort(survivors.begin(), survivors.end());
    std::string name = "degree " + std::to_string(d) + " survivors";
    if (threshold > 3) {
      CheckResult c;
      c.name = name;
      c.status = Status::skipped;
      c.computed = survivors;
      c.witness = witness;
      c.detail = "no reference list above threshold 3";
      report.add(std::move(c)).seconds = degree_clock.seconds();
      continue;
    }
    std::vector<std::string> expected;
    for (const auto& l : small_orbit_groups()) {
      if (l.group.degree() == d && l.maol_perm <= threshold) expected.push_back(l.name);
    }
    std::sort(expected.begin(), expected.end());
    auto& c = report.expect_equal(name, expected, survivors,
                                  std::to_string(entries.size()) + " transitive groups");
    c.witness = witness;
    c.seconds = degree_clock.seconds();
  }
  if (threshold <= 3) {
    for (const auto& l : small_orbit_groups()) {
      if (l.group.degree() > max_degree || l.maol_perm > threshold) continue;
      auto it = found.find(l.name);
      report.expect_equal(l.name + " maol_perm", l.maol_perm, it == found.end() ? json() : json(it->second));
    }
  }
  report.set_seconds(clock.seconds());
  return report;
}

VerificationReport verify_solubility_threshold(std::size_t max_degree, const CensusOptions& options) {
  check_degree(max_degree);
  Stopwatch clock;
  VerificationReport report("maol_perm <= 23 implies soluble");
  for (std::size_t d = 1; d <= max_degree; ++d) {
    Stopwatch degree_clock;
    auto entries = transitive_groups(d, options);
    json offenders = json::array();
    std::size_t small = 0;
    for (const auto& e : entries) {
      if (e.maol_perm > 23) continue;
      ++small;
      if (!e.soluble) offenders.push_back({{"generators", to_string(e.representative.generators())},
                                           {"maol_perm", e.maol_perm}});
    }
    auto& c = report.expect_true("degree " + std::to_string(d) + " small-orbit groups soluble", offenders.empty(),
                                 std::to_string(small) + " of " + std::to_string(entries.size()) +
                                     " groups have maol_perm <= 23",
                                 offenders.empty() ? json() : offenders);
    c.seconds = degree_clock.seconds();
  }
  const PermutationGroup a5 = alternating_natural(5);
  report.expect_equal("Alt(5) on 5 points maol_perm", 24, maol_perm(a5));
  report.expect_equal("Alt(5) on 5 points maol_perm via normaliser", 24, maol_perm_by_normaliser(a5));
  report.expect_true("Alt(5) insoluble", !is_soluble(a5));
  CheckResult sym5;
  sym5.name = "Sym(5) on 5 points maol_perm";
  sym5.computed = maol_perm_by_normaliser(symmetric_natural(5));
  sym5.expected = "> 23";
  sym5.status = sym5.computed.get<std::uint32_t>() > 23 ? Status::pass : Status::fail;
  sym5.detail = "recorded";
  report.add(std::move(sym5));
  report.set_seconds(clock.seconds());
  return report;
}

namespace {

/// Coordinates of the abelian block of a product element: the rotation
/// amount on each cyclic block.
std::vector<std::uint64_t> abelian_residues(const CandidatePair& c, const Permutation& g) {
  std::vector<std::uint64_t> out;
  std::size_t offset = 0;
  for (std::size_t f : c.abelian_factors) {
    out.push_back((g[static_cast<Point>(offset)] + f - offset) % f);
    offset += f;
  }
  return out;
}

}  // namespace

VerificationReport verify_table1(const AutOptions& options) {
  Stopwatch clock;
  VerificationReport report("candidate pairs (G, G_w) with G = A x Alt(5)");
  for (int row = 1; row <= kCandidatePairCount; ++row) {
    Stopwatch row_clock;
    const CandidatePair c = candidate_pair(row);
    const std::string r = "row " + std::to_string(row);
    const PermutationGroup& g = c.product.group;
    const PermutationGroup& h = c.stabilizer;

    AutSet perm = aut_perm(c.action.image, options);
    std::uint32_t m = max_orbit_length(perm, options.parallel);
    auto& main = report.expect_equal(r, c.expected_maol_perm, m, c.group_label + ", G_w = " + c.stabilizer_label);
    main.witness = {{"aut_perm_order", perm.size()}, {"degree", c.action.image.degree()}};

    report.expect_true(r + " G_w core-free", core_is_trivial(g, SubgroupHandle{g, h}));

    FiniteGroupPtr fg = g.finite();
    std::vector<Elem> projection;
    fg->quotient(fg->derived_subgroup(), &projection);
    std::set<Elem> p_image;
    for (Elem x : element_indices(g, h)) p_image.insert(projection[x]);
    report.expect_true(r + " |P| > 1", p_image.size() > 1, "|P| = " + std::to_string(p_image.size()));

    bool kills_derived = true;
    for (Elem x : element_indices(g, derived_subgroup(h).group)) kills_derived = kills_derived && projection[x] == projection[0];
    report.expect_true(r + " P quotient of G_w/G_w'", kills_derived);

    // G = zG x G' here, so zG is the abelian block and P its subgroup
    // generated by the block parts of the stabiliser generators.
    auto a = abelian::AbelianGroup::from_cyclic_orders(
        std::vector<std::uint64_t>(c.abelian_factors.begin(), c.abelian_factors.end()));
    std::vector<abelian::Vec> p_gens;
    for (const Permutation& x : h.generators()) p_gens.push_back(a.from_cyclic(abelian_residues(c, x)));
    const std::size_t p_order = a.span(p_gens).size();
    const bool split = fg->centre().size() == a.order() && fg->derived_subgroup().size() * a.order() == fg->order();
    if (!split || p_order != p_image.size()) {
      report.expect_true(r + " C_Aut(zG)(P) trivial", false, "zG is not the abelian block");
    } else if (p_order == a.order()) {
      report.expect_true(r + " C_Aut(zG)(P) trivial", true, "P = zG");
    } else {
      auto res = abelian::aut_centralizer_is_trivial(a, p_gens);
      json witness;
      if (res.witness) witness = res.witness->unit_images;
      report.expect_true(r + " C_Aut(zG)(P) trivial", res.trivial, "P < zG", witness);
    }
    main.seconds = row_clock.seconds();
  }
  report.set_seconds(clock.seconds());
  return report;
}

}  // namespace permorbit::census
