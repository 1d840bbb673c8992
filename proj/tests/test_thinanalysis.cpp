#include <doctest.h>

#include "thinlie/presets.hpp"
#include "thinlie/thinanalysis.hpp"

using namespace thinlie;

namespace {

struct Built {
  GradedAlgebra n;
  GradedAlgebra l;
  ThinReport rep;
};

Built build_preset(std::int64_t lambda, unsigned D = 60) {
  auto f = Field::make(7);
  auto pres = lambda == 0 ? nottingham_mixed_lambda0(7, 7, 1)
                          : nottingham_mixed({7, 7, 1, f->from_int(lambda), f});
  auto n = GradedAlgebra::create(pres);
  n.extend_to(D);
  auto l = n.central_quotient(D - 1);
  auto rep = diamond_report(l, 7);
  return {std::move(n), std::move(l), std::move(rep)};
}

}  // namespace

TEST_CASE("covering holds degreewise on the main preset") {
  auto b = build_preset(3);
  for (unsigned d = 1; d <= b.rep.covering_to; ++d) CHECK(check_covering(b.l, d));
  CHECK(b.rep.verdicts.covering);
  CHECK(b.rep.verdicts.thin);
  CHECK(b.rep.verdicts.no_consecutive);
  CHECK(b.rep.verdicts.spacing);
}

TEST_CASE("covering degenerates gracefully on the abelianized algebra") {
  auto f = Field::make(7);
  VContext ctx(7);
  Presentation p;
  p.field = f;
  p.q = 7;
  p.relators.push_back(parse_expr("[x y]", ctx, f));
  auto n = GradedAlgebra::create(p);
  n.extend_to(5);
  auto l = n.central_quotient(4);
  // everything collapses; the report classifies the algebra as not thin
  auto rep = diamond_report(l, 7);
  CHECK_FALSE(rep.verdicts.thin);
}

TEST_CASE("second diamond has type -1") {
  auto b = build_preset(3);
  const auto& rec = b.rep.at(7);
  CHECK(rec.kind == DiamondKind::genuine);
  CHECK(rec.type == TypeVal::finite(b.l.field()->from_int(-1)));
  CHECK(rec.t == 1);
}

TEST_CASE("slot t=8 carries the finite type lambda") {
  auto b = build_preset(3);
  const auto& rec = b.rep.at(49);
  CHECK(rec.kind == DiamondKind::genuine);
  CHECK(rec.type == TypeVal::finite(b.l.field()->from_int(3)));
  // intermediate slots are of infinite type
  for (unsigned t = 2; t <= 7; ++t) {
    const auto& r = b.rep.at(t * 6 + 1);
    CHECK(r.kind == DiamondKind::genuine);
    CHECK(r.type == TypeVal::infinite());
  }
}

TEST_CASE("lambda=1 preset: fake diamond of type 1 at degree 49") {
  auto b = build_preset(1);
  const auto& rec = b.rep.at(49);
  CHECK(rec.kind == DiamondKind::fake1);
  CHECK(rec.type == TypeVal::finite(b.l.field()->one()));
  // the type-0 reading at degree 50 is demoted by the convention
  CHECK(b.rep.at(50).kind == DiamondKind::none);
  // witness: [v8 y] = 0 in L
  VContext ctx(7);
  auto v8y = b.l.evaluate(parse_expr("[v8 y]", ctx, b.l.field()));
  CHECK(vec_is_zero(v8y.coords));
}

TEST_CASE("lambda=0 preset: fake diamond of type 0 at degree 49") {
  auto b = build_preset(0);
  const auto& rec = b.rep.at(49);
  CHECK(rec.kind == DiamondKind::fake0);
  CHECK(rec.type == TypeVal::finite(b.l.field()->zero()));
  CHECK(b.rep.at(48).kind == DiamondKind::none);  // demoted type-1 reading
  VContext ctx(7);
  auto v8x = b.l.evaluate(parse_expr("[v8 x]", ctx, b.l.field()));
  CHECK(vec_is_zero(v8x.coords));
}

TEST_CASE("genuine diamonds never get type 0 or 1") {
  for (std::int64_t lambda : {1, 3, 6}) {
    auto b = build_preset(lambda);
    for (const auto& rec : b.rep.records) {
      if (rec.kind != DiamondKind::genuine) continue;
      if (rec.type.tag != TypeVal::Tag::finite) continue;
      CHECK_FALSE(rec.type.mu.is_zero());
      CHECK_FALSE(rec.type.mu.is_one());
    }
  }
}

TEST_CASE("y centralizes every non-diamond component that does not precede one") {
  auto b = build_preset(3);
  for (unsigned d = 2; d + 1 <= b.rep.horizon; ++d) {
    const bool diamond_here = b.rep.at(std::min(d, b.rep.classified_to)).is_diamond();
    const bool diamond_next =
        d + 1 <= b.rep.classified_to && b.rep.at(d + 1).is_diamond();
    if (diamond_here || diamond_next || d > b.rep.classified_to) continue;
    for (std::size_t i = 0; i < b.l.dim(d); ++i)
      CHECK(vec_is_zero(b.l.act_elem(b.l.unit_element(d, i), Gen::y).coords));
  }
}

TEST_CASE("pattern matching on the main preset") {
  auto b = build_preset(3);
  auto lam = b.l.field()->from_int(3);
  CHECK(match_expected_pattern(b.rep, 7, 7, 1, lam));
  CHECK(b.rep.verdicts.pattern);
  // perturbed lambda must produce diffs
  auto b2 = build_preset(3);
  CHECK_FALSE(match_expected_pattern(b2.rep, 7, 7, 1, b2.l.field()->from_int(2)));
}

TEST_CASE("expected slot types follow the arithmetic progression") {
  auto f = Field::make(7);
  auto lam = f->from_int(3);
  CHECK(expected_slot_type(1, 7, 1, lam) == TypeVal::finite(f->from_int(-1)));
  for (unsigned t : {2u, 3u, 4u, 5u, 6u, 7u})
    CHECK(expected_slot_type(t, 7, 1, lam) == TypeVal::infinite());
  CHECK(expected_slot_type(8, 7, 1, lam) == TypeVal::finite(f->from_int(3)));
  CHECK(expected_slot_type(15, 7, 1, lam) == TypeVal::finite(f->zero()));
  CHECK(expected_slot_type(22, 7, 1, lam) == TypeVal::finite(f->from_int(4)));
  // lambda = -1: the progression r(lambda+1)-1 is constantly -1
  auto lam6 = f->from_int(6);
  for (unsigned r : {1u, 2u, 3u})
    CHECK(expected_slot_type(r * 7 + 1, 7, 1, lam6) == TypeVal::finite(f->from_int(-1)));
}

TEST_CASE("standard generators: presets return their own generators") {
  auto b = build_preset(3);
  auto sg = find_standard_generators(b.l);
  CHECK(sg.x.coords == b.l.gen_coords(Gen::x));
  CHECK(sg.y.coords == b.l.gen_coords(Gen::y));
}

TEST_CASE("standard generators: scrambled frame recovers the y line") {
  auto b = build_preset(3);
  const auto f = b.l.field();
  // frame x -> x + y, y -> y
  HomElement fx{1, b.l.gen_coords(Gen::x)};
  vec_add_scaled(fx.coords, f->one(), b.l.gen_coords(Gen::y));
  HomElement fy{1, b.l.gen_coords(Gen::y)};
  auto sg = find_standard_generators(b.l, std::make_pair(fx, fy));
  // recovered y' spans the same line as the original y
  const Vec& orig = b.l.gen_coords(Gen::y);
  bool proportional = false;
  for (std::uint64_t i = 1; i < f->order(); ++i) {
    Vec scaled = vec_scaled(orig, f->element_by_index(i));
    proportional = proportional || scaled == sg.y.coords;
  }
  CHECK(proportional);
  // and the standard relations hold for the returned pair
  HomElement v1 = sg.y;
  for (int r = 0; r < 5; ++r) v1 = b.l.bracket(v1, sg.x);
  CHECK(vec_is_zero(b.l.bracket(b.l.bracket(v1, sg.x), sg.x).coords));
}

TEST_CASE("standard generators fail on the free algebra") {
  Presentation p;
  p.field = Field::make(7);
  p.q = 7;
  auto n = GradedAlgebra::create(p);
  n.extend_to(10);
  CHECK_THROWS_AS(find_standard_generators(n), std::runtime_error);
}

TEST_CASE("report JSON has the schema fields") {
  auto b = build_preset(3);
  auto j = report_to_json(b.rep);
  CHECK(j["version"] == 1);
  CHECK(j["params"]["p"] == 7);
  CHECK(j["horizon"] == 59);
  CHECK(j["diamonds"].is_array());
  CHECK(j["checks"].contains("covering"));
  bool found49 = false;
  for (const auto& dj : j["diamonds"])
    if (dj["degree"] == 49) {
      found49 = true;
      CHECK(dj["kind"] == "genuine");
      CHECK(dj["type"] == "3");
      CHECK(dj["t"] == 8);
    }
  CHECK(found49);
}

TEST_CASE("lambda = -1: every finite-type slot has type -1 (degenerate progression)") {
  auto b = build_preset(6, 100);  // 6 = -1 in GF(7); slots t=8 and t=15 fit
  auto lam = b.l.field()->from_int(6);
  CHECK(match_expected_pattern(b.rep, 7, 7, 1, lam));
  CHECK(b.rep.at(49).type == TypeVal::finite(b.l.field()->from_int(-1)));
  CHECK(b.rep.at(91).type == TypeVal::finite(b.l.field()->from_int(-1)));
  for (const auto& rec : b.rep.records)
    if (rec.is_diamond()) CHECK(rec.kind != DiamondKind::fake0);
}

TEST_CASE("a type-1 fake at m pairs with a type-0 reading at m+1 (pre-convention)") {
  auto b = build_preset(1);
  auto rec50 = classify_degree(b.l, 50);
  CHECK(rec50.kind == DiamondKind::fake0);  // demoted only in the report
  auto rec49 = classify_degree(b.l, 49);
  CHECK(rec49.kind == DiamondKind::fake1);
}

TEST_CASE("central quotient iterations and bracket overflow guards") {
  auto b = build_preset(3);
  auto l2 = b.n.central_quotient(50, 2);
  CHECK(l2.computed_to() == 49);
  for (unsigned d = 1; d <= 49; ++d) CHECK(l2.dim(d) == b.l.dim(d));
  auto u = b.l.unit_element(30, 0);
  CHECK_THROWS_AS(b.l.bracket(u, u), std::out_of_range);
}

TEST_CASE("extension-field lambda: finite types leave the prime field, no fakes") {
  auto f = Field::make(7, 2);
  auto pres = nottingham_mixed({7, 7, 1, f->gen(), f});  // lambda = t
  auto n = GradedAlgebra::create(pres);
  n.extend_to(100);
  auto l = n.central_quotient(99);
  auto rep = diamond_report(l, 7);
  CHECK(match_expected_pattern(rep, 7, 7, 1, f->gen()));
  CHECK(rep.at(49).kind == DiamondKind::genuine);
  CHECK(rep.at(49).type == TypeVal::finite(f->gen()));
  // mu_2 = 2(t+1) - 1 = 2t + 1
  CHECK(rep.at(91).kind == DiamondKind::genuine);
  CHECK(rep.at(91).type == TypeVal::finite(f->element({1, 2})));
  for (const auto& rec : rep.records)
    CHECK((rec.kind != DiamondKind::fake0 && rec.kind != DiamondKind::fake1));
}
