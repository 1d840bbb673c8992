#include <doctest.h>

#include <random>

#include "thinlie/freelie_oracle.hpp"

using namespace thinlie;

TEST_CASE("free dimensions (Witt)") {
  CHECK(free_dims(1) == 2);
  CHECK(free_dims(2) == 1);
  CHECK(free_dims(12) == 335);
  CHECK_THROWS_AS(free_dims(0), std::out_of_range);
  CHECK_THROWS_AS(free_dims(15), std::out_of_range);
}

TEST_CASE("Lyndon bracket rewriting closes") {
  auto f = Field::make(7);
  FreeLieContext ctx(f, 9);
  std::mt19937_64 rng(31);
  for (int it = 0; it < 120; ++it) {
    const unsigned du = 1 + unsigned(rng() % 7);
    const unsigned dv = 1 + unsigned(rng() % (9 - du >= 1 ? 9 - du : 1));
    if (du + dv > 9) continue;
    const auto& lu = ctx.lyndon(du);
    const auto& lv = ctx.lyndon(dv);
    const std::size_t iu = rng() % lu.size(), iv = rng() % lv.size();
    // must not throw: the product re-expands over the Lyndon basis
    auto coords = ctx.bracket_basis(du, iu, dv, iv);
    CHECK(coords.size() == free_dims(du + dv));
  }
}

TEST_CASE("brute dims: free algebra") {
  auto f = Field::make(7);
  Presentation p;
  p.field = f;
  p.q = 7;
  auto dims = brute_quotient_dims(p, 10);
  for (unsigned d = 1; d <= 10; ++d) CHECK(dims[d] == free_dims(d));
}

TEST_CASE("brute dims: abelian quotient") {
  auto f = Field::make(7);
  VContext ctx(7);
  Presentation p;
  p.field = f;
  p.q = 7;
  p.relators.push_back(parse_expr("[x y]", ctx, f));
  auto dims = brute_quotient_dims(p, 5);
  CHECK(dims[1] == 2);
  for (unsigned d = 2; d <= 5; ++d) CHECK(dims[d] == 0);
}

TEST_CASE("adding relators never raises a dimension") {
  auto f = Field::make(7);
  VContext ctx(7);
  Presentation base;
  base.field = f;
  base.q = 7;
  base.relators.push_back(parse_expr("[y x y]", ctx, f));
  Presentation more = base;
  more.relators.push_back(parse_expr("[y x^2 y]", ctx, f));
  auto d1 = brute_quotient_dims(base, 8);
  auto d2 = brute_quotient_dims(more, 8);
  for (unsigned d = 1; d <= 8; ++d) CHECK(d2[d] <= d1[d]);
}

TEST_CASE("oracle degree cap") {
  Presentation p;
  p.field = Field::make(7);
  p.q = 7;
  CHECK_THROWS_AS(brute_quotient_dims(p, 13), std::out_of_range);
}
