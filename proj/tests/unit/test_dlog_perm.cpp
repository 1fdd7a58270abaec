#include "doctest.h"
#include "ppf/dlog_perm.hpp"

using namespace ppf;

TEST_CASE("discrete-log permutation tables") {
  CHECK(build_dlog_table(FieldCtx::make(5)) == std::vector<Elem>{0, 1, 2, 4, 3});
  CHECK(build_dlog_table(FieldCtx::make(3)) == std::vector<Elem>{0, 1, 2});
  CHECK(build_dlog_table(FieldCtx::make(7)) == std::vector<Elem>{0, 1, 3, 2, 5, 6, 4});
}

TEST_CASE("closed-form coefficients match the table") {
  auto f = FieldCtx::make(5);
  auto p = dlog_coeffs(f);
  CHECK(p.coeffs == std::vector<Elem>{0, 3, 2, 1});
  CHECK(p.table == build_dlog_table(f));
  CHECK(p.degree() == 3);
  CHECK(p.weight() == 3);

  auto f3 = FieldCtx::make(3);
  CHECK(dlog_coeffs(f3).coeffs == std::vector<Elem>{0, 1});
}

TEST_CASE("coefficients equal interpolation for all odd primes up to 31") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    auto f = FieldCtx::make(p);
    auto closed = dlog_coeffs(f);
    CHECK(closed.coeffs == interpolate(f, build_dlog_table(f)));
  }
}

TEST_CASE("alternate primitive elements give valid permutations too") {
  auto f = FieldCtx::make(7);
  auto t = build_dlog_table(f, 5);  // 5 also generates F_7^*
  CHECK(is_permutation_table(t));
  CHECK(t[1] == 1);  // f(xi^0) = 1
  CHECK(t[5] == 2);  // f(xi^1) = 2
  auto p = dlog_coeffs(f, 5);
  CHECK(p.table == t);
  CHECK_THROWS_AS(build_dlog_table(f, 2), Error);  // 2 has order 3, not primitive
}

TEST_CASE("prime-field requirement") {
  CHECK_THROWS_AS(build_dlog_table(FieldCtx::make(3, 2)), Error);
  CHECK_THROWS_AS(build_dlog_table(FieldCtx::make(2)), Error);
}

TEST_CASE("full report for p = 5") {
  auto f = FieldCtx::make(5);
  auto rep = verify_thm3(f);
  CHECK(rep.pass);
  CHECK(rep.deg == 3);
  CHECK(rep.w == 3);
  REQUIRE(rep.ind.has_value());
  CHECK(*rep.ind == 4);
  CHECK(rep.lin == 3);
  CHECK(rep.inv == 2);
  CHECK(rep.nmax == 4);
  REQUIRE(rep.crk_exact.has_value());
  CHECK(*rep.crk_exact == 1);
}

TEST_CASE("full report for p = 3 skips the index claim") {
  auto rep = verify_thm3(FieldCtx::make(3));
  CHECK(rep.pass);
  CHECK(!rep.ind.has_value());
  CHECK(rep.deg == 1);
}

TEST_CASE("report with a non-default primitive element") {
  auto rep = verify_thm3(FieldCtx::make(7), Elem{5});
  CHECK(rep.pass);
  CHECK(rep.xi == 5);
  CHECK(rep.deg == 5);
  CHECK(rep.w == 5);
}
