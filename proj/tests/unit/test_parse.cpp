#include "doctest.h"
#include "ppf/parse.hpp"

using namespace ppf;

TEST_CASE("field spec parsing") {
  CHECK(parse_field_spec("q=5").q() == 5);
  CHECK(parse_field_spec("q=9").q() == 9);
  auto f = parse_field_spec("p=3,k=2,mod=1,0,1");
  CHECK(f.q() == 9);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK_THROWS_AS(parse_field_spec(""), Error);
  CHECK_THROWS_AS(parse_field_spec("q=banana"), Error);
  CHECK_THROWS_AS(parse_field_spec("p=3"), Error);
  CHECK_THROWS_AS(parse_field_spec("q=6"), Error);  // not a prime power
}

TEST_CASE("expression parsing") {
  auto f = FieldCtx::make(5);
  CHECK(parse_poly(f, "x^3+2x^2+3x").coeffs == std::vector<Elem>{0, 3, 2, 1});
  CHECK(parse_poly(f, "0,3,2,1").coeffs == std::vector<Elem>{0, 3, 2, 1});
  CHECK(parse_poly(f, "x").coeffs == std::vector<Elem>{0, 1});
  CHECK(parse_poly(f, "7x").coeffs == std::vector<Elem>{0, 2});   // coefficient mod p
  CHECK(parse_poly(f, "x^5").coeffs == std::vector<Elem>{0, 1});  // reduced mod x^q - x
  CHECK(parse_poly(f, "-x+1").coeffs == std::vector<Elem>{1, 4});
  CHECK(parse_poly(f, "3").coeffs == std::vector<Elem>{3});
  CHECK(parse_poly(f, "x - x").degree() == -1);
}

TEST_CASE("parse errors carry an offset") {
  auto f = FieldCtx::make(5);
  try {
    parse_poly(f, "x^^2");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
    CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_poly(f, ""), Error);
  CHECK_THROWS_AS(parse_poly(f, "x+"), Error);
  CHECK_THROWS_AS(parse_poly(f, "y^2"), Error);
}

TEST_CASE("extension-field coefficients are element codes") {
  auto f = FieldCtx::from_order(9);
  CHECK(parse_poly(f, "4x").coeffs == std::vector<Elem>{0, 4});
  try {
    parse_poly(f, "10,0");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::coefficient_out_of_range);
  }
}

TEST_CASE("rendering round-trips") {
  auto f = FieldCtx::make(7);
  for (const char* s : {"x^3+2x^2+3x", "0,1,2,3", "5", "x^5+x"}) {
    auto p = parse_poly(f, s);
    CHECK(parse_poly(f, render_coeffs(p)).coeffs == p.coeffs);
  }
  CHECK(render_coeffs(parse_poly(f, "x^3")) == "0,0,0,1");
}
