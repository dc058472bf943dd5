#include <doctest.h>

#include "permorbit/bounds.hpp"
#include "permorbit/constructors.hpp"

using namespace permorbit;
using bounds::BoundValue;

namespace {

mpz_class pow_z(unsigned long b, unsigned long e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), b, e);
  return v;
}

bool brackets_exact(const BoundValue& b) {
  if (!b.exact) return false;
  // 2^lower <= exact <= 2^upper, compared through MPFR at full precision.
  mpfr_t x;
  mpfr_init2(x, 4096);
  mpfr_set_z(x, b.exact->get_mpz_t(), MPFR_RNDN);
  mpfr_log2(x, x, MPFR_RNDN);
  bool ok = mpfr_lessequal_p(b.log2_lower.get(), x) && mpfr_lessequal_p(x, b.log2_upper.get());
  mpfr_clear(x);
  return ok;
}

}  // namespace

TEST_CASE("bound function spot values") {
  CHECK(*bounds::frak_f(1, 1).exact == 256);
  CHECK(*bounds::frak_f(0, 1).exact == 1);
  CHECK(*bounds::ledermann_neumann_bound(1).exact == 2);
  CHECK(*bounds::ledermann_neumann_bound(2).exact == 17);
  CHECK(*bounds::ledermann_neumann_bound(4).exact == pow_z(4, 12) + 1);
  for (std::uint64_t d = 0; d <= 6; ++d) CHECK(*bounds::improved_bound(d, 1).exact == 2);
  CHECK(*bounds::improved_bound(1, 2).exact == 17);
  CHECK(*bounds::improved_bound(2, 3).exact == pow_z(3, 72) + 1);
  CHECK(bounds::check_spot_values().status() == Status::pass);
}

TEST_CASE("frak_f with d = 0 is n^(2n^3)") {
  for (unsigned long n = 1; n <= 12; ++n) {
    auto b = bounds::frak_f(0, n);
    REQUIRE(b.exact);
    CHECK(*b.exact == pow_z(n, 2 * n * n * n));
  }
}

TEST_CASE("frak_f at powers of two is exact and matches the formula") {
  // n = 2: exponent 2*8*d^2*(5 + d + 32) + 16 + 8d + 4d, times log2 n = 1.
  for (unsigned long d = 1; d <= 2; ++d) {
    auto b = bounds::frak_f(d, 2);
    REQUIRE(b.exact);
    const unsigned long e = 16 * d * d * (37 + d) + 16 + 12 * d;
    CHECK(*b.exact == pow_z(16, 3 * d) * pow_z(2, e));
  }
  CHECK(bounds::frak_f(2, 4).exact.has_value());
  // Past the bit cap only the brackets remain.
  auto big = bounds::frak_f(3, 16);
  CHECK_FALSE(big.exact.has_value());
  CHECK(mpfr_cmp_ui(big.log2_lower.get(), bounds::kMaxExactBits) > 0);
}

TEST_CASE("exact values sit inside their brackets") {
  for (std::uint64_t n = 1; n <= 40; ++n) CHECK(brackets_exact(bounds::ledermann_neumann_bound(n)));
  for (std::uint64_t d = 0; d <= 3; ++d) {
    for (std::uint64_t c = 1; c <= 4; ++c) CHECK(brackets_exact(bounds::improved_bound(d, c)));
  }
  CHECK(brackets_exact(bounds::frak_f(1, 2)));
  CHECK(brackets_exact(bounds::frak_f(0, 7)));
}

TEST_CASE("brackets are ordered and frak_f is monotone in n") {
  for (std::uint64_t d = 0; d <= 3; ++d) {
    for (std::uint64_t n = 1; n <= 16; ++n) {
      auto a = bounds::frak_f(d, n);
      CHECK(mpfr_lessequal_p(a.log2_lower.get(), a.log2_upper.get()));
      if (n < 16) {
        auto b = bounds::frak_f(d, n + 1);
        CHECK(mpfr_lessequal_p(a.log2_upper.get(), b.log2_lower.get()));
      }
    }
  }
}

TEST_CASE("ledermann_neumann_bound(n) >= n") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    auto b = bounds::ledermann_neumann_bound(n);
    CHECK(bounds::certified_le(mpz_class(static_cast<unsigned long>(n)), b));
  }
}

TEST_CASE("certified comparison") {
  CHECK(bounds::certified_le(256, bounds::frak_f(1, 1)));
  CHECK_FALSE(bounds::certified_le(257, bounds::frak_f(1, 1)));
  auto bracket_only = bounds::frak_f(1, 3);
  REQUIRE_FALSE(bracket_only.exact);
  CHECK(bounds::certified_le(pow_z(2, 1000), bracket_only));
  CHECK_FALSE(bounds::certified_le(pow_z(2, 100000), bracket_only));
  CHECK_THROWS_AS(bounds::frak_f(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(bounds::improved_bound(1, 0), std::invalid_argument);
}

TEST_CASE("bound checks on small groups") {
  auto klein = bounds::group_facts("(Z/2)^2", abelian_regular({2, 2}));
  CHECK(klein.aut_order == 6);
  CHECK(klein.maol == 3);
  CHECK(klein.rank == 2);
  CHECK(bounds::check_improved_abstract(klein).status() == Status::pass);

  auto s3 = bounds::group_facts("Sym(3)", symmetric_natural(3));
  CHECK(s3.aut_order == 6);
  CHECK(s3.maol == 3);
  CHECK(bounds::check_improved_abstract(s3).status() == Status::pass);

  auto z4 = bounds::group_facts("Z/4", cyclic_regular(4));
  CHECK(z4.aut_order == 2);
  CHECK(z4.maol == 2);
  CHECK(z4.rank == 1);

  auto d8 = bounds::group_facts("D_8", dihedral_natural(4));
  CHECK(d8.aut_perm_order == 4);
  CHECK(d8.derived_order == 2);
  CHECK(bounds::check_ledneu_permutation(d8).status() == Status::pass);
  CHECK(bounds::check_derived_order(d8).status() == Status::pass);

  auto z6 = bounds::group_facts("Z/6", cyclic_regular(6));
  CHECK(z6.rank == 1);
  CHECK(z6.aut_perm_order == 2);
  CHECK(bounds::check_ledneu_permutation(z6).status() == Status::pass);
  CHECK(bounds::check_semiregular_count(z6).status() == Status::pass);

  auto one = bounds::group_facts("1", cyclic_regular(1));
  CHECK(one.rank == 0);
  CHECK(bounds::check_ledneu_permutation(one).status() == Status::pass);

  CHECK_THROWS_AS(bounds::group_facts("x", parse_group_spec("degree=4; gens=(1,2)")), std::invalid_argument);
}

TEST_CASE("a violated bound fails with a witness") {
  auto f = bounds::group_facts("Z/4", cyclic_regular(4));
  f.aut_order = 3;  // more than maol^d = 2
  auto r = bounds::check_improved_abstract(f);
  CHECK(r.status() == Status::fail);
  CHECK_FALSE(r.checks().front().witness.is_null());
}

TEST_CASE("all bound checks pass on the standard corpus") {
  auto corpus = bounds::standard_corpus();
  CHECK(corpus.size() == 30 + 11 + 1);
  auto r = bounds::check_corpus(corpus);
  CHECK(r.status() == Status::pass);
  for (const auto& c : r.checks()) {
    if (c.status != Status::pass) FAIL_CHECK(c.name);
  }
  auto row1 = std::find_if(r.checks().begin(), r.checks().end(),
                           [](const CheckResult& c) { return c.name.rfind("candidate row 1 ", 0) == 0 && c.name.find("facts") != std::string::npos; });
  REQUIRE(row1 != r.checks().end());
  CHECK(row1->computed["derived_order"] == 60);
}
