#include <doctest.h>

#include <sstream>

#include "thinlie/bracketlang.hpp"

using namespace thinlie;

TEST_CASE("vword expansion") {
  VContext ctx(7);
  CHECK(word_to_string(vword(1, ctx).letters()) == "yxxxxx");
  CHECK(vword(1, ctx).degree() == 6);
  CHECK(word_to_string(vword(2, ctx).letters()) == "yxxxxxxyxxxx");
  VContext shifted(7, {2});
  CHECK(word_to_string(vword(2, shifted).letters()) == "yxxxxxyxxxxx");
  for (unsigned k = 1; k <= 40; ++k) {
    CHECK(vword(k, ctx).degree() == k * 6);
    CHECK(vword(k, shifted).degree() == k * 6);
  }
  VContext q25(25);
  for (unsigned k = 1; k <= 40; ++k) CHECK(vword(k, q25).degree() == k * 24);
}

TEST_CASE("parse basics") {
  auto f = Field::make(7);
  VContext ctx(7);
  auto e = parse_expr("[y x^3 y]", ctx, f);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].coeff == f->one());
  CHECK(word_to_string(e.terms()[0].word.letters()) == "yxxxy");

  auto e2 = parse_expr("[v1 y x] + 2[v1 x y]", ctx, f);
  REQUIRE(e2.terms().size() == 2);
  CHECK(e2.degree() == 8);

  auto e3 = parse_expr("[x^0 y]", ctx, f);
  REQUIRE(e3.terms().size() == 1);
  CHECK(word_to_string(e3.terms()[0].word.letters()) == "y");
}

TEST_CASE("term combination") {
  auto f = Field::make(7);
  VContext ctx(7);
  auto e = parse_expr("[x y] + [x y]", ctx, f);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].coeff == f->from_int(2));
  auto z = parse_expr("[x y] - [x y]", ctx, f);
  CHECK(z.is_zero());
}

TEST_CASE("parse errors carry positions") {
  auto f = Field::make(7);
  VContext ctx(7);
  CHECK_THROWS_AS(parse_expr("[x y", ctx, f), ParseError);
  CHECK_THROWS_AS(parse_expr("[v0 x]", ctx, f), ParseError);
  CHECK_THROWS_AS(parse_expr("3 * x y", ctx, f), ParseError);
  CHECK_THROWS_AS(parse_expr("", ctx, f), ParseError);
  CHECK_THROWS_AS(parse_expr("[x] + [x y]", ctx, f, true), ParseError);  // inhomogeneous
}

TEST_CASE("extension-field coefficients") {
  auto f = Field::make(5, 2);
  VContext ctx(25);
  auto e = parse_expr("(1+2*t)*[x y] - [y x]", ctx, f);
  REQUIRE(e.terms().size() == 2);
  auto txt = emit_expr(e);
  CHECK(parse_expr(txt, ctx, f) == e);
}

TEST_CASE("emit/parse round-trip") {
  auto f = Field::make(7);
  VContext ctx(7);
  for (const char* src : {"[y x^5]", "[v1 y x] + 2[v1 x y]", "3[y x y] - [x y x^2]", "[v2 x]"}) {
    auto e = parse_expr(src, ctx, f);
    CHECK(parse_expr(emit_expr(e), ctx, f) == e);
  }
}

TEST_CASE("presentation file round-trip") {
  auto f = Field::make(7);
  VContext ctx(7);
  Presentation p;
  p.field = f;
  p.q = 7;
  p.s = 1;
  p.lambda = f->from_int(3);
  p.label = "sample";
  p.relators.push_back(parse_expr("[y x y]", ctx, f));
  p.relators.push_back(parse_expr("3[v1 y x] + 2[v1 x y]", ctx, f));
  std::stringstream ss(presentation_to_string(p));
  Presentation p2 = read_presentation(ss);
  CHECK(p2.field->p() == 7);
  CHECK(p2.q == 7);
  CHECK(p2.s == 1);
  CHECK(*p2.lambda == f->from_int(3));
  REQUIRE(p2.relators.size() == 2);
  CHECK(p2.relators[0] == p.relators[0]);
  CHECK(p2.relators[1] == p.relators[1]);
}
