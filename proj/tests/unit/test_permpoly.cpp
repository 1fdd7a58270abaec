#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "ppf/cyclotomic.hpp"
#include "ppf/permpoly.hpp"

using namespace ppf;

TEST_CASE("eval examples over F_5") {
  auto f = FieldCtx::make(5);
  std::vector<Elem> c{0, 3, 2, 1};  // x^3 + 2x^2 + 3x
  CHECK(eval_poly(f, c, 3) == 4);
  CHECK(eval_poly(f, c, 0) == 0);
  std::vector<Elem> id{0, 1}, konst{4};
  CHECK(eval_poly(f, id, 2) == 2);
  CHECK(eval_poly(f, konst, 0) == 4);
}

TEST_CASE("interpolation examples") {
  auto f = FieldCtx::make(5);
  std::vector<Elem> t1{0, 1, 2, 4, 3}, t2{0, 1, 2, 3, 4}, t3{0, 1, 3, 2, 4};
  CHECK(interpolate(f, t1) == std::vector<Elem>{0, 3, 2, 1});
  CHECK(interpolate(f, t2) == std::vector<Elem>{0, 1});
  // x^3 over F_5 has table (0,1,3,2,4)
  CHECK(interpolate(f, t3) == std::vector<Elem>{0, 0, 0, 1});
}

TEST_CASE("interpolation round-trips random polynomials") {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
    auto f = FieldCtx::from_order(q);
    std::uniform_int_distribution<Elem> d(0, q - 1);
    for (int t = 0; t < 100; ++t) {
      std::vector<Elem> c(1 + rng() % q);
      for (auto& x : c) x = d(rng);
      auto poly = PermPoly::from_coeffs(f, c);
      CHECK(interpolate(f, poly.table) == poly.coeffs);
      for (Elem x = 0; x < q; ++x) CHECK(eval_poly(f, poly.coeffs, x) == poly.table[x]);
    }
  }
}

TEST_CASE("coefficient reduction mod x^q - x") {
  auto f = FieldCtx::make(5);
  // x^5 reduces to x
  CHECK(PermPoly::from_coeffs(f, {0, 0, 0, 0, 0, 1}).coeffs == std::vector<Elem>{0, 1});
  // x^8 -> x^4
  CHECK(PermPoly::from_coeffs(f, {0, 0, 0, 0, 0, 0, 0, 0, 1}).coeffs ==
        std::vector<Elem>{0, 0, 0, 0, 1});
  // constants and the zero polynomial
  CHECK(PermPoly::from_coeffs(f, {0, 0, 0}).coeffs.empty());
  CHECK(PermPoly::from_coeffs(f, {}).degree() == -1);
  CHECK(PermPoly::from_coeffs(f, {}).weight() == 0);
}

TEST_CASE("degree and weight examples") {
  auto f5 = FieldCtx::make(5);
  auto p = PermPoly::from_coeffs(f5, {0, 3, 2, 1});
  CHECK(p.degree() == 3);
  CHECK(p.weight() == 3);
  auto id = PermPoly::from_coeffs(f5, {0, 1});
  CHECK(id.degree() == 1);
  CHECK(id.weight() == 1);
  auto f7 = FieldCtx::make(7);
  auto x5 = PermPoly::from_coeffs(f7, {0, 0, 0, 0, 0, 1});
  CHECK(x5.degree() == 5);
  CHECK(x5.weight() == 1);
}

TEST_CASE("permutation detection") {
  auto f5 = FieldCtx::make(5);
  CHECK(is_permutation(PermPoly::from_coeffs(f5, {0, 0, 0, 1})));   // x^3
  CHECK(!is_permutation(PermPoly::from_coeffs(f5, {0, 0, 1})));     // x^2
  auto f7 = FieldCtx::make(7);
  // x^2 restricted to cosets: ell=2, r=2, a=(1,1) is x^2 on F_7^*, not injective
  auto tbl = cyc_eval(f7, CycMap{2, 2, {1, 1}});
  CHECK(!is_permutation_table(tbl));
}

TEST_CASE("origin normalization") {
  auto f = FieldCtx::make(5);
  auto shifted = PermPoly::from_coeffs(f, {1, 1});  // x + 1
  CHECK(normalize_origin(f, shifted).coeffs == std::vector<Elem>{0, 1});
  std::vector<Elem> t1{1, 3, 0, 2, 4}, t2{0, 1, 3, 2, 4};
  CHECK(normalize_origin_table(f, t1) == std::vector<Elem>{0, 2, 4, 1, 3});
  // already normalized: no-op
  CHECK(normalize_origin_table(f, t2) == t2);
}

TEST_CASE("from_table and from_coeffs agree") {
  std::mt19937_64 rng(4);
  for (std::uint32_t q : {7u, 9u}) {
    auto f = FieldCtx::from_order(q);
    std::vector<Elem> t(q);
    std::iota(t.begin(), t.end(), 0);
    for (int i = 0; i < 50; ++i) {
      std::shuffle(t.begin(), t.end(), rng);
      auto p = PermPoly::from_table(f, t);
      CHECK(p.table == t);
      CHECK(PermPoly::from_coeffs(f, p.coeffs).table == t);
      CHECK(p.degree() <= (int)q - 1);
    }
  }
}
