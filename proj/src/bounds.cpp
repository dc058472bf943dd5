#include "permorbit/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "permorbit/census.hpp"
#include "permorbit/constructors.hpp"
#include "permorbit/gn.hpp"

namespace permorbit::bounds {

using nlohmann::json;

Real::Real() {
  mpfr_init2(value_, kLogPrecision);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, kLogPrecision);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(mpfr_rnd_t rnd, int digits) const {
  char* buf = nullptr;
  std::string fmt = "%." + std::to_string(digits) + "R" + (rnd == MPFR_RNDD ? "D" : rnd == MPFR_RNDU ? "U" : "N") + "g";
  mpfr_asprintf(&buf, fmt.c_str(), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

namespace {

constexpr std::size_t kMaxJsonDigits = 1000;

void log2_of(mpfr_ptr out, const mpz_class& v, mpfr_rnd_t rnd) {
  mpfr_set_z(out, v.get_mpz_t(), rnd);
  mpfr_log2(out, out, rnd);
}

BoundValue from_exact(mpz_class v) {
  BoundValue b;
  log2_of(b.log2_lower.get(), v, MPFR_RNDD);
  log2_of(b.log2_upper.get(), v, MPFR_RNDU);
  b.exact = std::move(v);
  return b;
}

double approx_log2(const mpz_class& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

/// base^exponent + 1 for base >= 1.
BoundValue power_plus_one(const mpz_class& base, const mpz_class& exponent) {
  if (base == 1 || exponent == 0) return from_exact(2);
  // The exact route only runs when the estimate is well inside the cap.
  const double bits = approx_log2(base) * mpz_get_d(exponent.get_mpz_t());
  if (bits <= static_cast<double>(kMaxExactBits)) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return from_exact(v + 1);
  }
  // value > 2^{10^6}, so log2(value) exceeds exponent * log2(base) by far
  // less than 2^-64.
  BoundValue b;
  for (auto [out, rnd] : {std::pair{b.log2_lower.get(), MPFR_RNDD}, std::pair{b.log2_upper.get(), MPFR_RNDU}}) {
    log2_of(out, base, rnd);
    mpfr_mul_z(out, out, exponent.get_mpz_t(), rnd);
  }
  mpfr_t eps;
  mpfr_init2(eps, kLogPrecision);
  mpfr_set_ui_2exp(eps, 1, -64, MPFR_RNDU);
  mpfr_add(b.log2_upper.get(), b.log2_upper.get(), eps, MPFR_RNDU);
  mpfr_clear(eps);
  return b;
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// log2 frak_f(d, n) with every operation rounded in direction rnd. All
/// terms are nondecreasing in log2 n, so a bracket on log2 n gives one on
/// the result.
void frak_f_log2(mpfr_ptr out, std::uint64_t d, std::uint64_t n, mpfr_rnd_t rnd) {
  const mpz_class nz(static_cast<unsigned long>(n)), dz(static_cast<unsigned long>(d));
  const mpz_class n3 = nz * nz * nz;
  Real l, e;
  mpfr_set_z(l.get(), nz.get_mpz_t(), rnd);
  mpfr_log2(l.get(), l.get(), rnd);
  // e = 2 n^3 d^2 (5 + d + 4 n^3 log2 n) + 2 n^3 + 4 n d + 4 d
  mpfr_mul_z(e.get(), l.get(), mpz_class(4 * n3).get_mpz_t(), rnd);
  mpfr_add_z(e.get(), e.get(), mpz_class(5 + dz).get_mpz_t(), rnd);
  mpfr_mul_z(e.get(), e.get(), mpz_class(2 * n3 * dz * dz).get_mpz_t(), rnd);
  mpfr_add_z(e.get(), e.get(), mpz_class(2 * n3 + 4 * nz * dz + 4 * dz).get_mpz_t(), rnd);
  mpfr_mul(out, e.get(), l.get(), rnd);
  mpfr_add_z(out, out, mpz_class(4 * (nz + 1) * dz).get_mpz_t(), rnd);
}

}  // namespace

json BoundValue::to_json() const {
  json j{{"log2_lower", log2_lower.to_string(MPFR_RNDD)}, {"log2_upper", log2_upper.to_string(MPFR_RNDU)}};
  if (exact) {
    j["exact_bits"] = mpz_sizeinbase(exact->get_mpz_t(), 2);
    if (mpz_sizeinbase(exact->get_mpz_t(), 10) <= kMaxJsonDigits) j["exact"] = exact->get_str();
  }
  return j;
}

BoundValue frak_f(std::uint64_t d, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("frak_f: n must be positive");
  if (d == 0 || is_power_of_two(n)) {
    Real upper;
    frak_f_log2(upper.get(), d, n, MPFR_RNDU);
    if (mpfr_cmp_ui(upper.get(), kMaxExactBits) <= 0) {
      const mpz_class nz(static_cast<unsigned long>(n)), dz(static_cast<unsigned long>(d));
      const mpz_class n3 = nz * nz * nz;
      mpz_class v;
      if (d == 0) {
        mpz_pow_ui(v.get_mpz_t(), nz.get_mpz_t(), mpz_class(2 * n3).get_ui());
      } else {
        const unsigned long k = static_cast<unsigned long>(std::countr_zero(n));
        const mpz_class e = 2 * n3 * dz * dz * (5 + dz + 4 * n3 * k) + 2 * n3 + 4 * nz * dz + 4 * dz;
        const mpz_class bits = 4 * (nz + 1) * dz + e * k;
        mpz_ui_pow_ui(v.get_mpz_t(), 2, bits.get_ui());
      }
      return from_exact(v);
    }
  }
  BoundValue b;
  frak_f_log2(b.log2_lower.get(), d, n, MPFR_RNDD);
  frak_f_log2(b.log2_upper.get(), d, n, MPFR_RNDU);
  return b;
}

BoundValue ledermann_neumann_bound(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ledermann_neumann_bound: n must be positive");
  const mpz_class nz(static_cast<unsigned long>(n));
  const unsigned long floor_log = static_cast<unsigned long>(std::bit_width(n) - 1);
  return power_plus_one(nz, nz * (1 + floor_log));
}

BoundValue improved_bound(std::uint64_t d, std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("improved_bound: c must be positive");
  if (static_cast<double>(d) * std::log2(static_cast<double>(c)) > static_cast<double>(kMaxExactBits)) {
    throw CapExceeded("improved_bound: c^d has more than " + std::to_string(kMaxExactBits) + " bits");
  }
  const mpz_class cz(static_cast<unsigned long>(c));
  mpz_class cd;
  mpz_pow_ui(cd.get_mpz_t(), cz.get_mpz_t(), static_cast<unsigned long>(d));
  // floor(d log2 c) = floor(log2 c^d), read off the bit length.
  const mpz_class floor_log = static_cast<unsigned long>(mpz_sizeinbase(cd.get_mpz_t(), 2) - 1);
  return power_plus_one(cz, mpz_class(static_cast<unsigned long>(d)) * cd * (1 + floor_log));
}

bool certified_le(const mpz_class& value, const BoundValue& bound) {
  if (bound.exact) return value <= *bound.exact;
  if (value <= 1) return mpfr_sgn(bound.log2_lower.get()) >= 0;
  Real v;
  log2_of(v.get(), value, MPFR_RNDU);
  return mpfr_lessequal_p(v.get(), bound.log2_lower.get()) != 0;
}

json GroupFacts::to_json() const {
  return json{{"label", label},
              {"degree", group.degree()},
              {"generators", to_string(group.generators())},
              {"order", order},
              {"derived_order", derived_order},
              {"rank", rank},
              {"aut_order", aut_order},
              {"aut_perm_order", aut_perm_order},
              {"maol", maol},
              {"maol_perm", maol_perm}};
}

GroupFacts group_facts(std::string label, const PermutationGroup& g, const AutOptions& options) {
  if (!g.is_transitive()) throw std::invalid_argument("group_facts: group is not transitive");
  GroupFacts f;
  f.label = std::move(label);
  f.group = g;
  FiniteGroupPtr fg = g.finite();
  f.order = fg->order();
  f.derived_order = fg->derived_subgroup().size();
  f.rank = min_generating_tuple(*fg).rank;
  AutSet aut = automorphism_group(fg, options);
  AutSet perm = aut_perm(g, aut);
  f.aut_order = aut.size();
  f.aut_perm_order = perm.size();
  f.maol = max_orbit_length(aut, options.parallel);
  f.maol_perm = max_orbit_length(perm, options.parallel);
  return f;
}

namespace {

CheckResult bound_check(std::string name, const mpz_class& value, const BoundValue& bound, json facts) {
  CheckResult c;
  c.name = std::move(name);
  c.status = certified_le(value, bound) ? Status::pass : Status::fail;
  c.expected = json{{"at_most", bound.to_json()}};
  c.computed = value.get_str();
  c.witness = std::move(facts);
  return c;
}

mpz_class power(std::uint64_t base, std::size_t e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return v;
}

CheckResult int_check(std::string name, const mpz_class& value, const mpz_class& bound, json facts) {
  CheckResult c;
  c.name = std::move(name);
  c.status = value <= bound ? Status::pass : Status::fail;
  c.expected = json{{"at_most", bound.get_str()}};
  c.computed = value.get_str();
  c.witness = std::move(facts);
  return c;
}

mpz_class z(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

}  // namespace

VerificationReport check_ledneu_permutation(const GroupFacts& f) {
  VerificationReport r("|G| <= f(d, |Aut_perm|)");
  r.add(bound_check("|G| <= f(d, |Aut_perm|)", z(f.order), frak_f(f.rank, f.aut_perm_order),
                    {{"d", f.rank}, {"aut_perm_order", f.aut_perm_order}}));
  return r;
}

VerificationReport check_semiregular_count(const GroupFacts& f) {
  VerificationReport r("|Aut_perm| <= maol_perm^d");
  r.add(int_check("|Aut_perm| <= maol_perm^d", z(f.aut_perm_order), power(f.maol_perm, f.rank),
                  {{"d", f.rank}, {"maol_perm", f.maol_perm}}));
  return r;
}

VerificationReport check_improved_abstract(const GroupFacts& f) {
  VerificationReport r("abstract bounds");
  r.add(int_check("|Aut| <= maol^d", z(f.aut_order), power(f.maol, f.rank), {{"d", f.rank}, {"maol", f.maol}}));
  r.add(bound_check("|G| <= improved_bound(d, maol)", z(f.order), improved_bound(f.rank, f.maol),
                    {{"d", f.rank}, {"maol", f.maol}}));
  return r;
}

VerificationReport check_derived_order(const GroupFacts& f) {
  VerificationReport r("|G'| <= n^(2n^3)");
  r.add(bound_check("|G'| <= n^(2n^3), n = |Aut_perm|", z(f.derived_order), frak_f(0, f.aut_perm_order),
                    {{"n", f.aut_perm_order}}));
  return r;
}

std::vector<CorpusGroup> standard_corpus(std::size_t max_degree) {
  std::vector<CorpusGroup> out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::size_t i = 0;
    for (const auto& e : census::transitive_groups(d)) {
      std::string label = "degree " + std::to_string(d) + " #" + std::to_string(++i) + " (order " +
                          std::to_string(e.order) + (e.name ? ", " + *e.name : std::string{}) + ")";
      out.push_back({std::move(label), e.representative});
    }
  }
  for (int row = 1; row <= kCandidatePairCount; ++row) {
    auto c = candidate_pair(row);
    out.push_back({"candidate row " + std::to_string(row) + " (" + c.group_label + ")", c.action.image});
  }
  out.push_back({"G_1 on the cosets of H_1", gn::coset_representation(gn::GnGroup(1))});
  return out;
}

VerificationReport check_corpus(const std::vector<CorpusGroup>& corpus, const AutOptions& options) {
  Stopwatch clock;
  VerificationReport report("bound inequalities on the corpus");
  for (const auto& g : corpus) {
    Stopwatch group_clock;
    try {
      GroupFacts f = group_facts(g.label, g.group, options);
      for (const auto& sub : {check_ledneu_permutation(f), check_semiregular_count(f), check_improved_abstract(f),
                              check_derived_order(f)}) {
        report.merge(sub, g.label + ": ");
      }
      CheckResult facts;
      facts.name = g.label + ": facts";
      facts.status = Status::pass;
      facts.computed = f.to_json();
      facts.seconds = group_clock.seconds();
      report.add(std::move(facts));
    } catch (const std::exception& e) {
      CheckResult c;
      c.name = g.label;
      c.status = Status::fail;
      c.detail = e.what();
      c.witness = json{{"generators", to_string(g.group.generators())}};
      report.add(std::move(c));
    }
  }
  report.set_seconds(clock.seconds());
  return report;
}

VerificationReport check_spot_values() {
  VerificationReport r("bound function values");
  auto exact = [](const BoundValue& b) { return b.exact ? json(b.exact->get_str()) : json(); };
  r.expect_equal("f(1,1)", "256", exact(frak_f(1, 1)));
  r.expect_equal("ledermann_neumann_bound(2)", "17", exact(ledermann_neumann_bound(2)));
  for (std::uint64_t d = 0; d <= 4; ++d) {
    r.expect_equal("improved_bound(" + std::to_string(d) + ",1)", "2", exact(improved_bound(d, 1)));
  }
  r.expect_equal("improved_bound(1,2)", "17", exact(improved_bound(1, 2)));
  r.expect_equal("improved_bound(2,3)", mpz_class(power(3, 72) + 1).get_str(), exact(improved_bound(2, 3)));
  r.expect_equal("ledermann_neumann_bound(4)", mpz_class(power(4, 12) + 1).get_str(),
                 exact(ledermann_neumann_bound(4)));
  r.expect_equal("f(0,3)", power(3, 54).get_str(), exact(frak_f(0, 3)));
  return r;
}

}  // namespace permorbit::bounds
