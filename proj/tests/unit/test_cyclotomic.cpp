#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "ppf/cyclotomic.hpp"
#include "ppf/permpoly.hpp"

using namespace ppf;

TEST_CASE("coset structure over F_7, ell = 2") {
  auto f = FieldCtx::make(7);
  auto cs = CosetStructure::make(f, 2);
  // squares: 1, 2, 4 in C_0; 3, 5, 6 in C_1
  CHECK(cs.of(1) == 0);
  CHECK(cs.of(2) == 0);
  CHECK(cs.of(4) == 0);
  CHECK(cs.of(3) == 1);
  CHECK(cs.of(5) == 1);
  CHECK(cs.of(6) == 1);
}

TEST_CASE("cyc_eval examples") {
  auto f7 = FieldCtx::make(7);
  CHECK(cyc_eval(f7, CycMap{2, 1, {1, 6}}) == std::vector<Elem>{0, 1, 2, 4, 4, 2, 1});
  CHECK(cyc_eval(f7, CycMap{3, 1, {1, 6, 6}}) == std::vector<Elem>{0, 1, 5, 4, 3, 2, 6});
  auto f5 = FieldCtx::make(5);
  CHECK(cyc_eval(f5, CycMap{1, 3, {1}}) == std::vector<Elem>{0, 1, 3, 2, 4});
}

TEST_CASE("cyc map validation") {
  auto f = FieldCtx::make(7);
  CHECK_THROWS_AS(validate_cyc_map(f, CycMap{4, 1, {1, 1, 1, 1}}), Error);  // 4 does not divide 6
  CHECK_THROWS_AS(validate_cyc_map(f, CycMap{2, 1, {1, 0}}), Error);        // zero coefficient
  CHECK_THROWS_AS(validate_cyc_map(f, CycMap{2, 1, {1}}), Error);           // wrong length
}

TEST_CASE("Wang criterion examples") {
  auto f = FieldCtx::make(7);
  CHECK(wang_is_permutation(f, CycMap{3, 1, {1, 6, 6}}));
  CHECK(!wang_is_permutation(f, CycMap{2, 1, {1, 6}}));
  CHECK(!wang_is_permutation(f, CycMap{2, 2, {1, 1}}));
  // ...even though the same-coset sufficient condition reads true for it
  CHECK(wang_same_coset_condition(f, CycMap{2, 2, {1, 1}}));
}

TEST_CASE("Wang criterion agrees with direct testing, exhaustive small cases") {
  auto f = FieldCtx::make(7);
  for (std::uint32_t ell : divisors(6)) {
    std::vector<Elem> a(ell, 1);
    auto next = [&]() {  // odometer over (F_7^*)^ell
      for (std::size_t i = 0; i < ell; ++i) {
        if (++a[i] < 7) return true;
        a[i] = 1;
      }
      return false;
    };
    do {
      for (std::uint32_t r = 0; r < 6; ++r) {
        CycMap m{ell, r, a};
        CHECK(wang_is_permutation(f, m) == is_permutation_table(cyc_eval(f, m)));
      }
    } while (next());
  }
}

TEST_CASE("Wang criterion agrees with direct testing, random larger cases") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {11u, 13u, 31u}) {
    auto f = FieldCtx::from_order(q);
    auto divs = divisors(q - 1);
    int mismatches = 0;
    for (int t = 0; t < 10000; ++t) {
      std::uint32_t ell = divs[rng() % divs.size()];
      CycMap m{ell, (std::uint32_t)(rng() % (q - 1)), {}};
      m.a.resize(ell);
      for (auto& x : m.a) x = 1 + rng() % (q - 1);
      if (wang_is_permutation(f, m) != is_permutation_table(cyc_eval(f, m))) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("index computation examples") {
  auto f5 = FieldCtx::make(5);
  std::vector<Elem> id{0, 1, 2, 3, 4}, cube{0, 1, 3, 2, 4}, dlog{0, 1, 2, 4, 3};

  auto r1 = compute_index(f5, id);
  CHECK(r1.ell == 1);
  CHECK(r1.witness.r == 1);
  CHECK(r1.witness.a == std::vector<Elem>{1});

  auto r2 = compute_index(f5, cube);
  CHECK(r2.ell == 1);
  CHECK(r2.witness.r == 3);

  auto r3 = compute_index(f5, dlog);
  CHECK(r3.ell == 4);
  CHECK(verify_index_witness(f5, dlog, r3.witness));
}

TEST_CASE("index error conditions") {
  auto f = FieldCtx::make(5);
  std::vector<Elem> shifted{1, 2, 3, 4, 0};
  CHECK_THROWS_AS(compute_index(f, shifted), Error);
  // vanishes on F_q^*: no multiplicative branch form exists
  std::vector<Elem> vanishing{0, 0, 1, 2, 3};
  try {
    compute_index(f, vanishing);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_cyclotomic_form);
  }
}

TEST_CASE("every origin-fixing map over a small field has an index") {
  auto f = FieldCtx::make(7);
  std::vector<Elem> t{0, 1, 2, 3, 4, 5, 6};
  do {
    auto res = compute_index(f, t);
    CHECK(verify_index_witness(f, t, res.witness));
    CHECK((6 % res.ell) == 0);
  } while (std::next_permutation(t.begin() + 1, t.end()));
}

TEST_CASE("index is minimal: no witness exists at a smaller divisor") {
  std::mt19937_64 rng(6);
  for (std::uint32_t q : {9u, 13u}) {
    auto f = FieldCtx::from_order(q);
    auto divs = divisors(q - 1);
    for (int t = 0; t < 50; ++t) {
      CycMap m{divs[rng() % divs.size()], (std::uint32_t)(rng() % (q - 1)), {}};
      m.a.resize(m.ell);
      for (auto& x : m.a) x = 1 + rng() % (q - 1);
      auto tbl = cyc_eval(f, m);
      auto res = compute_index(f, tbl);
      CHECK(res.ell <= m.ell);
      for (auto d : divs) {
        if (d >= res.ell) break;
        CHECK(!try_cyclotomic_form(f, tbl, d).has_value());
      }
    }
  }
}

TEST_CASE("index is invariant under nonzero scaling") {
  std::mt19937_64 rng(7);
  auto f = FieldCtx::make(11);
  std::vector<Elem> t(11);
  std::iota(t.begin(), t.end(), 0);
  for (int i = 0; i < 30; ++i) {
    std::shuffle(t.begin() + 1, t.end(), rng);
    auto base = compute_index(f, t).ell;
    for (Elem c = 2; c < 11; c += 3) {
      std::vector<Elem> scaled(11);
      for (Elem x = 0; x < 11; ++x) scaled[x] = f.mul(c, t[x]);
      CHECK(compute_index(f, scaled).ell == base);
    }
  }
}

TEST_CASE("divisors helper") {
  CHECK(divisors(6) == std::vector<std::uint32_t>{1, 2, 3, 6});
  CHECK(divisors(1) == std::vector<std::uint32_t>{1});
  CHECK(divisors(12) == std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12});
}
