// Acceptance suite: one pass/fail line per criterion; exit nonzero on any
// failure. Expected values are frozen from the brute-force oracle and the
// predicted diamond patterns; every tolerance here is exact equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "thinlie/combinatorics.hpp"
#include "thinlie/freelie_oracle.hpp"
#include "thinlie/identity_verifier.hpp"
#include "thinlie/presets.hpp"
#include "thinlie/thinanalysis.hpp"

using namespace thinlie;
using Clock = std::chrono::steady_clock;

namespace {

struct Instance {
  std::string name;
  Presentation pres;
  std::uint64_t p, q, s;
  GradedAlgebra n;
  GradedAlgebra l;
  ThinReport rep;
};

std::vector<Instance> g_instances;

Instance make_instance(const std::string& name, Presentation pres, std::uint64_t p,
                       std::uint64_t q, std::uint64_t s, unsigned D) {
  auto n = GradedAlgebra::create(pres);
  n.extend_to(D);
  auto l = n.central_quotient(D - 1);
  auto rep = diamond_report(l, q);
  match_expected_pattern(rep, p, q, s, pres.lambda ? *pres.lambda : pres.field->zero());
  return {name, std::move(pres), p, q, s, std::move(n), std::move(l), std::move(rep)};
}

struct Check {
  std::ostringstream log;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "\n    FAIL: " << what;
    }
  }
};

// ---- criterion 1 ---------------------------------------------------------

bool criterion1(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;
  auto f = Field::make(7);
  VContext ctx(7);
  std::vector<std::pair<std::string, Presentation>> cases;
  cases.push_back({"preset lambda=3", nottingham_mixed({7, 7, 1, f->from_int(3), f})});
  cases.push_back({"preset lambda=1", nottingham_mixed({7, 7, 1, f->from_int(1), f})});
  {
    Presentation free_p;
    free_p.field = f;
    free_p.q = 7;
    cases.push_back({"free", free_p});
    Presentation ab;
    ab.field = f;
    ab.q = 7;
    ab.relators.push_back(parse_expr("[x y]", ctx, f));
    cases.push_back({"[x y]", ab});
  }
  FreeLieContext shared(f, 12);
  for (auto& [name, pres] : cases) {
    auto a = GradedAlgebra::create(pres);
    a.extend_to(12);
    auto oracle = brute_quotient_dims(pres, 12, shared);
    for (unsigned d = 1; d <= 12; ++d)
      c.require(a.dim(d) == oracle[d], name + ": engine dim " + std::to_string(a.dim(d)) +
                                           " != oracle dim " + std::to_string(oracle[d]) +
                                           " at degree " + std::to_string(d));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 5.0, "runtime " + std::to_string(secs) + "s exceeds 5s");
  detail = "engine dims = oracle dims to degree 12 on 4 presentations" + c.log.str();
  return c.ok;
}

// ---- criterion 2 ---------------------------------------------------------

bool criterion2(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;
  auto f = Field::make(7);
  g_instances.push_back(
      make_instance("(7,7,1,3)", nottingham_mixed({7, 7, 1, f->from_int(3), f}), 7, 7, 1, 120));
  const Instance& I = g_instances.back();
  c.require(I.l.dim(1) == 2, "dim L_1 != 2");
  c.require(I.rep.at(7).kind == DiamondKind::genuine &&
                I.rep.at(7).type == TypeVal::finite(f->from_int(-1)),
            "second diamond at degree 7 must have type -1");
  for (unsigned t = 2; t <= 19; ++t) {
    const auto& rec = I.rep.at(t * 6 + 1);
    if (t == 8) {
      c.require(rec.kind == DiamondKind::genuine && rec.type == TypeVal::finite(f->from_int(3)),
                "degree 49 must be a genuine diamond of type 3");
    } else if (t == 15) {
      c.require(rec.kind == DiamondKind::fake0, "degree 91 must be a fake diamond of type 0");
    } else {
      c.require(rec.kind == DiamondKind::genuine && rec.type == TypeVal::infinite(),
                "degree " + std::to_string(t * 6 + 1) + " must be a genuine diamond of type inf");
    }
  }
  for (unsigned d = 1; d <= 119; ++d) {
    const bool slot = (d - 1) % 6 == 0 && d != 91 && d <= 115;
    c.require(I.l.dim(d) == (slot ? 2u : 1u),
              "dim L_" + std::to_string(d) + " = " + std::to_string(I.l.dim(d)));
  }
  for (unsigned d = 1; d <= 118; ++d)
    c.require(check_covering(I.l, d), "covering fails at degree " + std::to_string(d));
  c.require(I.rep.verdicts.thin && I.rep.verdicts.pattern, "thin/pattern verdicts");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
  detail = "main instance (7,7,1,3) at D=120: full diamond pattern and covering" + c.log.str();
  return c.ok;
}

// ---- criterion 3 ---------------------------------------------------------

bool criterion3(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;
  auto f = Field::make(7);
  g_instances.push_back(
      make_instance("(7,7,1,1)", nottingham_mixed({7, 7, 1, f->from_int(1), f}), 7, 7, 1, 120));
  const Instance& I = g_instances.back();
  c.require(I.rep.at(49).kind == DiamondKind::fake1, "degree 49 must be fake of type 1");
  VContext ctx(7);
  auto v8y = I.l.evaluate(parse_expr("[v8 y]", ctx, f));
  c.require(vec_is_zero(v8y.coords), "witness [v8 y] = 0 fails in L");
  // mu_r = 2r - 1: t = 15 (r = 2) has type 3; other slots infinite
  for (unsigned t = 2; t <= 19; ++t) {
    if (t == 8) continue;
    const auto& rec = I.rep.at(t * 6 + 1);
    if (t == 15)
      c.require(rec.kind == DiamondKind::genuine && rec.type == TypeVal::finite(f->from_int(3)),
                "degree 91 must be a genuine diamond of type 3");
    else
      c.require(rec.type == TypeVal::infinite(),
                "degree " + std::to_string(t * 6 + 1) + " must have type inf");
  }
  c.require(I.rep.verdicts.thin && I.rep.verdicts.pattern, "thin/pattern verdicts");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
  detail = "fake type-1 instance (7,7,1,1) at D=120: [v8 y] = 0 and mu_r = 2r-1" + c.log.str();
  return c.ok;
}

// ---- criterion 4 ---------------------------------------------------------

bool criterion4(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;
  auto pres = nottingham_mixed_lambda0(7, 7, 1);
  c.require(pres.relators.size() == 16 && pres.relators.back().degree() == 98,
            "lambda=0 preset must add the degree-98 relator [v16 x x]");
  g_instances.push_back(make_instance("(7,7,1,0)", pres, 7, 7, 1, 110));
  const Instance& I = g_instances.back();
  auto f = I.pres.field;
  c.require(I.rep.at(49).kind == DiamondKind::fake0, "degree 49 must be fake of type 0");
  c.require(I.rep.at(91).kind == DiamondKind::fake1, "degree 91 must be fake of type 1");
  for (unsigned t = 2; t * 6 + 1 <= I.rep.classified_to; ++t) {
    if (t == 8 || t == 15) continue;
    c.require(I.rep.at(t * 6 + 1).type == TypeVal::infinite(),
              "degree " + std::to_string(t * 6 + 1) + " must have type inf");
  }
  c.require(I.rep.verdicts.thin && I.rep.verdicts.pattern, "thin/pattern verdicts");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 10.0, "runtime " + std::to_string(secs) + "s exceeds 10s");
  detail = "lambda=0 variant at D=110: mu_r = r-1 with fake0 at 49, fake1 at 91" + c.log.str();
  return c.ok;
}

// ---- criterion 5 ---------------------------------------------------------

bool criterion5(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;
  auto f = Field::make(5);
  g_instances.push_back(
      make_instance("(5,25,1,2)", nottingham_mixed({5, 25, 1, f->from_int(2), f}), 5, 25, 1, 200));
  const Instance& I = g_instances.back();
  c.require(I.rep.at(25).kind == DiamondKind::genuine &&
                I.rep.at(25).type == TypeVal::finite(f->from_int(-1)),
            "second diamond at degree 25 must have type -1");
  for (unsigned t = 2; t <= 5; ++t)
    c.require(I.rep.at(t * 24 + 1).type == TypeVal::infinite(),
              "degree " + std::to_string(t * 24 + 1) + " must have type inf");
  c.require(I.rep.at(145).kind == DiamondKind::genuine &&
                I.rep.at(145).type == TypeVal::finite(f->from_int(2)),
            "degree 145 must be a genuine diamond of type 2");
  for (const auto& rec : I.rep.records)
    if (rec.is_diamond() && rec.degree > 1)
      c.require((rec.degree - 1) % 24 == 0, "diamond off the 24t+1 grid at degree " +
                                                std::to_string(rec.degree));
  c.require(I.rep.verdicts.thin && I.rep.verdicts.pattern, "thin/pattern verdicts");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
  detail = "q = p^2 instance (5,25,1,2) at D=200: diamonds at 24t+1, type 2 at 145" + c.log.str();
  return c.ok;
}

// ---- criterion 6 ---------------------------------------------------------

bool criterion6(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;
  std::size_t checked = 0, vacuous = 0;
  for (const auto& I : g_instances) {
    for (const auto& name : suite_names()) {
      auto res = verify_suite(I.l, &I.n, I.rep, name);
      checked += res.items.size() - res.vacuous_count();
      vacuous += res.vacuous_count();
      for (const auto& item : res.items)
        if (!item.vacuous && !item.pass)
          c.require(false, I.name + " " + name + " " + item.site + ": " + item.label + " (lhs " +
                               item.lhs + ", rhs " + item.rhs + ")");
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 30.0, "runtime " + std::to_string(secs) + "s exceeds 30s");
  detail = "identity suites on all four instances: " + std::to_string(checked) +
           " identities checked, " + std::to_string(vacuous) + " vacuous sites itemized" +
           c.log.str();
  return c.ok;
}

// ---- criterion 7 ---------------------------------------------------------

bool criterion7(std::string& detail) {
  Check c;
  for (const auto& I : g_instances) {
    std::uint64_t ps = 1;
    for (std::uint64_t i = 0; i < I.s; ++i) ps *= I.p;
    std::optional<unsigned> earliest;
    for (const auto& rec : I.rep.records) {
      if (rec.degree <= I.q || !rec.is_diamond()) continue;
      if (rec.type.tag == TypeVal::Tag::finite) {
        earliest = rec.degree;
        break;
      }
    }
    c.require(earliest.has_value(), I.name + ": no finite-type diamond past L_q in horizon");
    if (earliest) {
      const std::uint64_t a = (*earliest - 1) / (I.q - 1);
      c.require(*earliest == a * (I.q - 1) + 1 && a - 1 == ps,
                I.name + ": earliest finite-type diamond at degree " + std::to_string(*earliest) +
                    " but a-1 != p^s");
      c.require(a % 2 == 0, I.name + ": index a = " + std::to_string(a) + " is not even");
    }
  }
  detail =
      "earliest finite-type diamond past L_q sits at a(q-1)+1 with a-1 = p^s (a even), all "
      "instances";
  return c.ok;
}

// ---- criterion 8 ---------------------------------------------------------

bool criterion8(std::string& detail) {
  Check c;
  std::mt19937_64 rng(20260810);
  for (const auto& I : g_instances) {
    for (const GradedAlgebra* alg : {&I.n, &I.l}) {
      const unsigned top = alg->computed_to();
      GradedAlgebra::BracketCache cache;
      auto random_elem = [&](unsigned d) {
        HomElement e = alg->zero_element(d);
        for (auto& coeff : e.coords)
          coeff = alg->field()->element_by_index(rng() % alg->field()->order());
        return e;
      };
      int done = 0;
      while (done < 200) {
        const unsigned da = 1 + unsigned(rng() % (top / 2));
        const unsigned db = 1 + unsigned(rng() % (top / 2));
        const unsigned dc = 1 + unsigned(rng() % (top / 2));
        if (da + db + dc > top) continue;
        auto a = random_elem(da), b = random_elem(db), cc = random_elem(dc);
        auto j1 = alg->bracket(alg->bracket(a, b, cache), cc, cache);
        auto j2 = alg->bracket(alg->bracket(b, cc, cache), a, cache);
        auto j3 = alg->bracket(alg->bracket(cc, a, cache), b, cache);
        Vec sum = j1.coords;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += j2.coords[i] + j3.coords[i];
        if (!vec_is_zero(sum)) {
          c.require(false, I.name + ": Jacobi fails on a sampled triple of degrees " +
                               std::to_string(da) + "," + std::to_string(db) + "," +
                               std::to_string(dc));
          break;
        }
        ++done;
      }
      done = 0;
      while (done < 200) {
        const unsigned da = 1 + unsigned(rng() % (top - 1));
        const unsigned db = 1 + unsigned(rng() % (top - 1));
        if (da + db > top) continue;
        auto a = random_elem(da), b = random_elem(db);
        auto ab = alg->bracket(a, b, cache), ba = alg->bracket(b, a, cache);
        Vec sum = ab.coords;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += ba.coords[i];
        if (!vec_is_zero(sum)) {
          c.require(false, I.name + ": antisymmetry fails on a sampled pair");
          break;
        }
        ++done;
      }
    }
    // sandwich identities on every basis element of the quotient
    for (unsigned d = 1; d + 2 <= I.l.computed_to(); ++d)
      for (std::size_t i = 0; i < I.l.dim(d); ++i)
        if (!vec_is_zero(
                I.l.act_elem(I.l.act_elem(I.l.unit_element(d, i), Gen::y), Gen::y).coords))
          c.require(false, I.name + ": (ad y)^2 != 0 in degree " + std::to_string(d));
    for (unsigned d = 1; d + I.q <= I.l.computed_to(); ++d)
      for (std::size_t i = 0; i < I.l.dim(d); ++i) {
        HomElement e = I.l.unit_element(d, i);
        for (std::uint64_t r = 0; r < I.q; ++r) e = I.l.act_elem(e, Gen::x);
        if (!vec_is_zero(e.coords))
          c.require(false, I.name + ": (ad x)^q != 0 in degree " + std::to_string(d));
      }
  }
  for (auto [q, p] : {std::pair<std::uint64_t, std::uint64_t>{7, 7}, {25, 5}, {49, 7}})
    for (std::uint64_t i = 0; i < q; ++i)
      if (binom_mod_p(q - 1, i, p) != (i % 2 == 0 ? 1 : p - 1))
        c.require(false, "Lucas identity C(q-1,i) = (-1)^i fails for q=" + std::to_string(q));
  detail =
      "sampled Jacobi/antisymmetry (200 each) in all 8 algebras, sandwich identities on every "
      "quotient basis, Lucas identity for q in {7,25,49}" +
      c.log.str();
  return c.ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{{1, criterion1}, {2, criterion2}, {3, criterion3},
                                        {4, criterion4}, {5, criterion5}, {6, criterion6},
                                        {7, criterion7}, {8, criterion8}};
  bool all_ok = true;
  for (const auto& cr : criteria) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = cr.run(detail);
    } catch (const std::exception& e) {
      detail += std::string("\n    EXCEPTION: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream line;
    line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": " << detail << " ("
         << std::fixed;
    line.precision(2);
    line << secs << "s)";
    std::cout << line.str() << std::endl;
    all_ok = all_ok && ok;
  }
  std::cout << (all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
            << std::endl;
  return all_ok ? 0 : 1;
}
