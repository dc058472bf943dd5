#include "permorbit/selftest.hpp"

#include <algorithm>

#include "permorbit/abelian.hpp"
#include "permorbit/census.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/gn.hpp"
#include "permorbit/lemmas.hpp"

namespace permorbit::selftest {

using nlohmann::json;

namespace {

std::uint64_t order(const PermutationGroup& g) { return g.order_u64(); }

void copy_checks(VerificationReport& out, const VerificationReport& from, const std::vector<std::string>& names,
                 const std::string& prefix) {
  for (const auto& c : from.checks()) {
    if (std::find(names.begin(), names.end(), c.name) == names.end()) continue;
    CheckResult copy = c;
    copy.name = prefix + c.name;
    out.add(std::move(copy));
  }
}

}  // namespace

VerificationReport run(const AutOptions& options) {
  Stopwatch clock;
  VerificationReport report("worked examples");

  const auto d8 = dihedral_natural(4);
  report.expect_equal("D_8 <= Sym(4) has order 8", 8, order(d8));
  report.expect_true("D_8 <= Sym(4) is transitive and not regular", d8.is_transitive() && !d8.is_regular());
  report.expect_true("point stabilizer of D_8 is core-free", core_is_trivial(d8, point_stabilizer(d8, 0)));
  {
    bool all = true;
    for (Point p = 1; p < d8.degree(); ++p) {
      all = all && subgroup_transporter(d8, point_stabilizer(d8, 0).group, point_stabilizer(d8, p).group).has_value();
    }
    report.expect_true("point stabilizers of D_8 are conjugate", all);
  }
  const auto z6 = cyclic_regular(6);
  report.expect_true("Z/6 regular is transitive and regular of order 6",
                     z6.is_transitive() && z6.is_regular() && order(z6) == 6);
  const auto v4 = abelian_regular({2, 2});
  report.expect_true("(Z/2)^2 regular has degree 4 and is regular", v4.degree() == 4 && v4.is_regular());
  {
    const auto d6 = dihedral_natural(3);
    const auto s3 = symmetric_natural(3);
    report.expect_true("D_6 in natural action is Sym(3)",
                       d6.degree() == 3 && order(d6) == 6 &&
                           std::all_of(s3.generators().begin(), s3.generators().end(),
                                       [&](const Permutation& p) { return d6.contains(p); }));
  }

  for (int row : {1, 11}) {
    const auto c = candidate_pair(row);
    report.expect_equal("row " + std::to_string(row) + ": |" + c.group_label + "|", row == 1 ? 180 : 240,
                        order(c.product.group));
  }
  for (int row : {1, 9, 11}) {
    const auto c = candidate_pair(row);
    json computed = {{"order", order(c.action.image)},
                     {"stabilizer_order", order(c.stabilizer)},
                     {"degree", c.action.image.degree()}};
    json expected = row == 1   ? json{{"order", 180}, {"stabilizer_order", 3}, {"degree", 60}}
                    : row == 9 ? json{{"order", 120}, {"stabilizer_order", 10}, {"degree", 12}}
                               : json{{"order", 240}, {"stabilizer_order", 4}, {"degree", 60}};
    report.expect_equal("row " + std::to_string(row) + " coset action", expected, computed);
  }

  {
    auto a = abelian::AbelianGroup::from_cyclic_orders({6});
    auto b = a.from_cyclic({2});
    report.expect_true("centraliser of Z/3 in Aut(Z/6) is trivial", abelian::aut_centralizer_is_trivial(a, {b}).trivial);
  }
  report.expect_equal("phi(9)", 6, abelian::euler_phi(9));
  report.merge(lemmas::check_non_elementary_counterexample(), "counterexample: ");

  for (unsigned n = 1; n <= gn::kMaxN; ++n) {
    gn::GnGroup g(n);
    const std::string name = "G_" + std::to_string(n);
    report.expect_equal("|" + name + "|", std::uint64_t{1} << ((1U << n) + 3), g.order());
    report.expect_equal("|centre of " + name + "|", 4, g.centre().size());
    auto alpha = gn::alpha_n(g);
    report.expect_true("alpha_" + std::to_string(n) + " is an automorphism fixing a and b",
                       alpha.is_automorphism() && alpha.images[g.a()] == g.a() && alpha.images[g.b()] == g.b());
  }
  {
    gn::GnGroup g(1);
    report.expect_equal("x_1^2 in G_1", g.to_string(g.b()), g.to_string(g.multiply(g.x(1), g.x(1))));
    report.expect_equal("x_2 x_1 in G_1", g.to_string(g.multiply(g.multiply(g.x(1), g.x(2)), g.a())),
                        g.to_string(g.multiply(g.x(2), g.x(1))));
    json conjugates = json::array();
    for (const auto& s : gn::stabilizer_class(g)) conjugates.push_back(g.to_string(s[1]));
    report.expect_equal("conjugates of <x_2> in G_1", json{"x2", "x2*a", "x2*b", "x2*a*b"}, conjugates);

    std::vector<gn::GnElement> labels;
    auto fg = g.finite(&labels);
    auto lengths = element_orbit_lengths(central_automorphisms(fg), options.parallel);
    bool transitive = true;
    for (std::size_t e = 0; e < labels.size(); ++e) transitive = transitive && lengths[e] == (g.x_bits(labels[e]) ? 4U : 1U);
    report.expect_true("central automorphisms of G_1 are transitive on nontrivial centre cosets", transitive);
  }
  for (unsigned n = 1; n <= 2; ++n) {
    report.expect_equal("maol_perm(G_" + std::to_string(n) + ")", 4, gn::maol_perm(n, options.parallel));
  }

  for (const auto& [name, g] : std::vector<std::pair<std::string, PermutationGroup>>{
           {"(Z/2)^2 regular", v4}, {"Z/6 regular", z6}, {"Sym(3) regular", regular_representation(*symmetric_natural(3).finite())}}) {
    report.expect_true(name + ": aut_perm = Aut", aut_perm(g, options) == automorphism_group(g, options));
  }
  report.expect_equal("maol_perm(D_8 <= Sym(4))", 2, maol_perm(d8, options));
  report.expect_equal("maol_perm(Z/2 regular)", 1, maol_perm(cyclic_regular(2), options));
  report.expect_equal("maol_perm(Alt(5) natural)", 24, maol_perm(alternating_natural(5), options));

  auto classification = census::verify_orbit_length_classification(6, 3);
  copy_checks(report, classification, {"degree 4 survivors", "degree 5 survivors", "degree 6 survivors"}, "");
  auto solubility = census::verify_solubility_threshold(6);
  copy_checks(report, solubility, {"Alt(5) insoluble", "Alt(5) on 5 points maol_perm"}, "");
  {
    bool soluble = true;
    for (const auto& c : solubility.checks()) {
      if (c.name.find("soluble") != std::string::npos && c.name.rfind("degree", 0) == 0) {
        soluble = soluble && c.status == Status::pass;
      }
    }
    report.expect_true("degree <= 6 groups with maol_perm <= 23 are soluble", soluble);
  }
  auto table = census::verify_table1(options);
  copy_checks(report, table, {"row 3", "row 5", "row 7", "row 11"}, "candidate pair ");

  const auto parsed = parse_group_spec("degree=4; gens=(1,2,3,4),(1,3)");
  report.expect_true("parsed D_8 spec is D_8 <= Sym(4)",
                     parsed.degree() == 4 && order(parsed) == 8 &&
                         census::listed_name(parsed) == std::optional<std::string>("D_8 <= Sym(4)"));
  report.expect_equal("maolperm of the parsed D_8 spec", 2, maol_perm(parsed, options));
  {
    bool rejected = false;
    try {
      parse_group_spec("degree=2; gens=(1,3)");
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    report.expect_true("point out of range is rejected", rejected);
  }
  report.set_seconds(clock.seconds());
  return report;
}

}  // namespace permorbit::selftest
