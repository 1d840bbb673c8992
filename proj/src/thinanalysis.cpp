#include "thinlie/thinanalysis.hpp"

#include <algorithm>
#include <sstream>

#include "thinlie/presets.hpp"

namespace thinlie {

std::string kind_name(DiamondKind k) {
  switch (k) {
    case DiamondKind::first: return "first";
    case DiamondKind::genuine: return "genuine";
    case DiamondKind::fake0: return "fake0";
    case DiamondKind::fake1: return "fake1";
    case DiamondKind::none: return "none";
    case DiamondKind::ambiguous: return "ambiguous";
  }
  return "?";
}

std::string TypeVal::str() const {
  switch (tag) {
    case Tag::finite: return mu.str();
    case Tag::infinite: return "inf";
    case Tag::none: return "none";
  }
  return "?";
}

std::vector<unsigned> ThinReport::diamond_degrees() const {
  std::vector<unsigned> out;
  for (const auto& r : records)
    if (r.is_diamond()) out.push_back(r.degree);
  return out;
}

namespace {

std::string coords_str(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ')';
  return os.str();
}

}  // namespace

bool check_covering(const GradedAlgebra& l, unsigned d, std::string* diagnostic) {
  if (d + 1 > l.computed_to())
    throw std::out_of_range("covering check needs degree d <= computed_to - 1");
  const FieldPtr& f = l.field();
  const std::size_t n = l.dim(d), m = l.dim(d + 1);
  if (n == 0) return true;  // nothing to quantify over
  if (n > 2) {
    if (diagnostic) *diagnostic = "dim L_" + std::to_string(d) + " = " + std::to_string(n) + " > 2";
    return false;
  }
  auto span_ok = [&](const Vec& z) {
    std::vector<Vec> rows{mat_apply(z, l.act(d, Gen::x)), mat_apply(z, l.act(d, Gen::y))};
    return rank_of(std::move(rows), f) == m;
  };
  if (n == 1) {
    if (span_ok(l.unit_element(d, 0).coords)) return true;
    if (diagnostic) *diagnostic = "[z L_1] != L_" + std::to_string(d + 1) + " at degree " + std::to_string(d);
    return false;
  }
  // projective points of a 2-dimensional component: (1 : c) and (0 : 1)
  for (std::uint64_t i = 0; i <= f->order(); ++i) {
    Vec z = zero_vec(f, 2);
    if (i < f->order()) {
      z[0] = f->one();
      z[1] = f->element_by_index(i);
    } else {
      z[1] = f->one();
    }
    if (!span_ok(z)) {
      if (diagnostic)
        *diagnostic = "z = " + coords_str(z) + " in degree " + std::to_string(d) +
                      " does not cover L_" + std::to_string(d + 1);
      return false;
    }
  }
  return true;
}

StandardGenerators find_standard_generators(const GradedAlgebra& l,
                                            std::optional<std::pair<HomElement, HomElement>> frame) {
  const FieldPtr& f = l.field();
  const std::uint64_t q = l.presentation().q;
  if (q < 7) throw std::runtime_error("standard generators need the presentation parameter q");
  if (l.computed_to() < q + 2)
    throw std::runtime_error("standard generators need the algebra computed to degree >= q+2");
  if (l.dim(1) != 2) throw std::runtime_error("dim L_1 != 2: no standard generators");

  HomElement f0{1, l.gen_coords(Gen::x)}, f1{1, l.gen_coords(Gen::y)};
  if (frame) {
    f0 = frame->first;
    f1 = frame->second;
  }

  // candidates (a, b) for y' = a f0 + b f1 over the projective line,
  // basis vectors first so preset algebras return their own generators
  std::vector<std::pair<Fel, Fel>> pts;
  pts.push_back({f->one(), f->zero()});
  pts.push_back({f->zero(), f->one()});
  for (std::uint64_t i = 0; i < f->order(); ++i) {
    Fel c = f->element_by_index(i);
    if (!c.is_zero()) pts.push_back({f->one(), c});
  }

  auto combine = [&](const Fel& a, const Fel& b) {
    HomElement e{1, zero_vec(f, l.dim(1))};
    vec_add_scaled(e.coords, a, f0.coords);
    vec_add_scaled(e.coords, b, f1.coords);
    return e;
  };

  std::optional<std::pair<Fel, Fel>> ypt;
  for (const auto& [a, b] : pts) {
    HomElement yc = combine(a, b);
    // w2 spans [L_1, y'] inside L_2
    HomElement w0 = l.bracket(f0, yc), w1 = l.bracket(f1, yc);
    const HomElement& w2 = vec_is_zero(w0.coords) ? w1 : w0;
    if (vec_is_zero(w2.coords)) continue;
    if (vec_is_zero(l.bracket(w2, yc).coords)) {
      if (ypt) throw std::runtime_error("the line with [L_2 y] = 0 is not unique");
      ypt = {a, b};
    }
  }
  if (!ypt) throw std::runtime_error("no line with [L_2 y] = 0: not a Nottingham algebra");
  HomElement yprime = combine(ypt->first, ypt->second);

  // x base: the first frame vector independent of y' (f1 when y' involves
  // f0, else f0)
  const bool base_is_f0 = ypt->first.is_zero();
  HomElement xbase = base_is_f0 ? f0 : f1;
  std::pair<Fel, Fel> xbase_pt = base_is_f0 ? std::make_pair(f->one(), f->zero())
                                            : std::make_pair(f->zero(), f->one());

  for (std::uint64_t i = 0; i < f->order(); ++i) {
    const Fel c = f->element_by_index(i);
    HomElement xc{1, xbase.coords};
    vec_add_scaled(xc.coords, c, yprime.coords);
    // v1 = [y' xc^{q-2}]
    HomElement v1 = yprime;
    for (std::uint64_t r = 0; r < q - 2; ++r) v1 = l.bracket(v1, xc);
    if (vec_is_zero(v1.coords)) continue;
    if (!vec_is_zero(l.bracket(l.bracket(v1, xc), xc).coords)) continue;
    HomElement lhs = l.bracket(l.bracket(v1, yprime), xc);
    HomElement rhs = l.bracket(l.bracket(v1, xc), yprime);
    Vec test = lhs.coords;
    vec_add_scaled(test, f->from_int(2), rhs.coords);
    if (!vec_is_zero(test)) continue;
    StandardGenerators out{xc, yprime, Mat(f, 2, 2)};
    out.change.at(0, 0) = xbase_pt.first + c * ypt->first;
    out.change.at(0, 1) = xbase_pt.second + c * ypt->second;
    out.change.at(1, 0) = ypt->first;
    out.change.at(1, 1) = ypt->second;
    return out;
  }
  throw std::runtime_error("no x completes the standard generator relations");
}

DiamondRecord classify_degree(const GradedAlgebra& l, unsigned m) {
  if (m < 2 || m + 1 > l.computed_to())
    throw std::out_of_range("classify_degree needs 2 <= m <= computed_to - 1");
  const FieldPtr& f = l.field();
  const std::uint64_t q = l.presentation().q;
  DiamondRecord rec;
  rec.degree = m;
  if (q >= 3 && (m - 1) % (q - 1) == 0) rec.t = unsigned((m - 1) / (q - 1));

  if (l.dim(m - 1) != 1) {
    rec.kind = DiamondKind::none;
    rec.note = "preceding component is not one-dimensional (dim = " +
               std::to_string(l.dim(m - 1)) + ")";
    return rec;
  }
  const HomElement w = l.unit_element(m - 1, 0);
  const HomElement wx = l.act_elem(w, Gen::x), wy = l.act_elem(w, Gen::y);
  const std::size_t dm = l.dim(m);

  if (dm == 2) {
    const Vec wxx = l.act_elem(wx, Gen::x).coords, wyy = l.act_elem(wy, Gen::y).coords;
    const Vec wyx = l.act_elem(wy, Gen::x).coords, wxy = l.act_elem(wx, Gen::y).coords;
    rec.witness.push_back({"[wxx]", coords_str(wxx)});
    rec.witness.push_back({"[wyy]", coords_str(wyy)});
    rec.witness.push_back({"[wyx]", coords_str(wyx)});
    rec.witness.push_back({"[wxy]", coords_str(wxy)});
    if (!vec_is_zero(wxx) || !vec_is_zero(wyy)) {
      rec.kind = DiamondKind::ambiguous;
      rec.note = "two-dimensional component without [wxx] = 0 = [wyy]";
      return rec;
    }
    if (l.dim(m + 1) == 1) {
      const Fel alpha = wyx[0], beta = wxy[0];
      rec.kind = DiamondKind::genuine;
      if ((alpha + beta).is_zero())
        rec.type = TypeVal::infinite();
      else
        rec.type = TypeVal::finite(beta * (alpha + beta).inv());
    } else if (l.dim(m + 1) == 0) {
      rec.kind = DiamondKind::genuine;
      rec.type = TypeVal::unassigned();
      rec.note = "next component vanishes: no type assigned";
    } else {
      rec.kind = DiamondKind::ambiguous;
      rec.note = "dim L_" + std::to_string(m + 1) + " = " + std::to_string(l.dim(m + 1)) +
                 ": consecutive two-dimensional components";
    }
    return rec;
  }
  if (dm == 1) {
    const bool wx0 = vec_is_zero(wx.coords), wy0 = vec_is_zero(wy.coords);
    if (wy0 && vec_is_zero(l.act_elem(wx, Gen::x).coords)) {
      rec.kind = DiamondKind::fake1;
      rec.type = TypeVal::finite(f->one());
      rec.witness.push_back({"[wy]", "0"});
      rec.witness.push_back({"[wxx]", "0"});
      return rec;
    }
    if (wx0 && vec_is_zero(l.act_elem(wy, Gen::y).coords)) {
      rec.kind = DiamondKind::fake0;
      rec.type = TypeVal::finite(f->zero());
      rec.witness.push_back({"[wx]", "0"});
      rec.witness.push_back({"[wyy]", "0"});
      return rec;
    }
    rec.kind = DiamondKind::none;
    return rec;
  }
  rec.kind = dm == 0 ? DiamondKind::none : DiamondKind::ambiguous;
  if (dm > 2) rec.note = "component dimension " + std::to_string(dm) + " exceeds 2";
  return rec;
}

ThinReport diamond_report(const GradedAlgebra& l, std::uint64_t q) {
  if (q < 3) throw std::invalid_argument("diamond_report needs q >= 3");
  if (l.computed_to() < 2) throw std::invalid_argument("algebra not computed far enough");
  ThinReport rep;
  const FieldPtr& f = l.field();
  rep.p = f->p();
  rep.q = q;
  rep.s = l.presentation().s;
  rep.field_k = f->k();
  rep.lambda_text = l.presentation().lambda ? l.presentation().lambda->str() : "0";
  rep.modulus = f->modulus();
  rep.horizon = l.computed_to();
  rep.classified_to = rep.horizon - 1;
  rep.covering_to = rep.horizon - 1;
  rep.warnings = l.warnings();
  for (unsigned d = 1; d <= rep.horizon; ++d) rep.dims.push_back(l.dim(d));

  rep.records.resize(rep.classified_to);
  {
    DiamondRecord first;
    first.degree = 1;
    first.t = 0;
    first.kind = l.dim(1) == 2 ? DiamondKind::first : DiamondKind::none;
    first.type = TypeVal::unassigned();
    if (l.dim(1) != 2) first.note = "dim L_1 = " + std::to_string(l.dim(1));
    rep.records[0] = std::move(first);
  }
  for (unsigned m = 2; m <= rep.classified_to; ++m) rep.records[m - 1] = classify_degree(l, m);

  // Convention: a fake-1 at m forces fake-0 at m+1; report exactly one of
  // them, the one whose degree is 1 mod (q-1).
  for (unsigned m = 2; m + 1 <= rep.classified_to; ++m) {
    auto& a = rep.records[m - 1];
    auto& b = rep.records[m];
    if (a.kind != DiamondKind::fake1 || b.kind != DiamondKind::fake0) continue;
    const bool a_slot = (m - 1) % (q - 1) == 0;
    const bool b_slot = m % (q - 1) == 0;
    if (a_slot && !b_slot) {
      b.kind = DiamondKind::none;
      b.type = TypeVal::unassigned();
      b.note = "type-0 reading of the fake diamond reported at degree " + std::to_string(m);
    } else if (b_slot && !a_slot) {
      a.kind = DiamondKind::none;
      a.type = TypeVal::unassigned();
      a.note = "type-1 reading of the fake diamond reported at degree " + std::to_string(m + 1);
    } else {
      a.note = "fake pair placement ambiguous (degrees " + std::to_string(m) + "," +
               std::to_string(m + 1) + ")";
      b.note = a.note;
      a.kind = DiamondKind::ambiguous;
      b.kind = DiamondKind::ambiguous;
    }
  }

  // global verdicts
  bool covering_ok = true;
  for (unsigned d = 1; d <= rep.covering_to; ++d) {
    std::string diag;
    if (!check_covering(l, d, &diag)) {
      covering_ok = false;
      rep.discrepancies.push_back("covering fails at degree " + std::to_string(d) + ": " + diag);
    }
  }
  rep.verdicts.covering = covering_ok;

  bool dims_ok = l.dim(1) == 2;
  if (!dims_ok) rep.discrepancies.push_back("dim L_1 = " + std::to_string(l.dim(1)) + " (want 2)");
  for (unsigned d = 1; d <= rep.horizon; ++d)
    if (l.dim(d) > 2) {
      dims_ok = false;
      rep.discrepancies.push_back("dim L_" + std::to_string(d) + " = " + std::to_string(l.dim(d)) +
                                  " exceeds 2");
      break;
    }
  bool has_second = false;
  for (unsigned d = 2; d <= rep.horizon; ++d) has_second = has_second || l.dim(d) == 2;
  if (!has_second)
    rep.discrepancies.push_back("no diamond past degree 1 within the horizon (maximal class?)");
  rep.verdicts.thin = dims_ok && covering_ok && has_second;

  rep.verdicts.no_consecutive = true;
  for (unsigned d = 1; d + 1 <= rep.horizon; ++d)
    if (l.dim(d) == 2 && l.dim(d + 1) == 2) {
      rep.verdicts.no_consecutive = false;
      rep.discrepancies.push_back("consecutive diamonds at degrees " + std::to_string(d) + "," +
                                  std::to_string(d + 1));
    }

  rep.verdicts.spacing = true;
  auto dd = rep.diamond_degrees();
  for (std::size_t i = 1; i < dd.size(); ++i)
    if (dd[i] - dd[i - 1] != q - 1) {
      rep.verdicts.spacing = false;
      rep.discrepancies.push_back("diamond spacing " + std::to_string(dd[i] - dd[i - 1]) +
                                  " between degrees " + std::to_string(dd[i - 1]) + " and " +
                                  std::to_string(dd[i]));
    }
  return rep;
}

TypeVal expected_slot_type(unsigned t, std::uint64_t p, std::uint64_t s, const Fel& lambda) {
  if (t == 0) return TypeVal::unassigned();
  std::uint64_t ps = 1;
  for (std::uint64_t i = 0; i < s; ++i) ps *= p;
  const FieldPtr f = lambda.field();
  if (t == 1) return TypeVal::finite(f->from_int(-1));
  if ((t - 1) % ps != 0) return TypeVal::infinite();
  const std::uint64_t r = (t - 1) / ps;
  const Fel mu = f->from_int(std::int64_t(r % p)) * (lambda + f->one()) - f->one();
  return TypeVal::finite(mu);
}

bool match_expected_pattern(ThinReport& rep, std::uint64_t p, std::uint64_t q, std::uint64_t s,
                            const Fel& lambda) {
  std::vector<std::string> diffs;
  const FieldPtr f = lambda.field();
  for (unsigned m = 2; m <= rep.classified_to; ++m) {
    const auto& rec = rep.at(m);
    DiamondKind want_kind = DiamondKind::none;
    TypeVal want_type = TypeVal::unassigned();
    if ((m - 1) % (q - 1) == 0) {
      const unsigned t = unsigned((m - 1) / (q - 1));
      want_type = expected_slot_type(t, p, s, lambda);
      want_kind = DiamondKind::genuine;
      if (want_type.tag == TypeVal::Tag::finite) {
        if (want_type.mu.is_zero()) want_kind = DiamondKind::fake0;
        if (want_type.mu.is_one()) want_kind = DiamondKind::fake1;
      }
    }
    if (rec.kind != want_kind || !(rec.type == want_type)) {
      diffs.push_back("degree " + std::to_string(m) + ": have " + kind_name(rec.kind) + "/" +
                      rec.type.str() + ", expected " + kind_name(want_kind) + "/" +
                      want_type.str());
    }
  }
  rep.verdicts.pattern_checked = true;
  rep.verdicts.pattern = diffs.empty();
  for (auto& d : diffs) rep.discrepancies.push_back("pattern: " + d);
  return rep.verdicts.pattern;
}

VContext report_vcontext(const ThinReport& rep) {
  VContext ctx(rep.q);
  for (const auto& rec : rep.records) {
    if (rec.kind == DiamondKind::fake0 && rec.t && *rec.t >= 1) ctx.mu0_steps.insert(*rec.t + 1);
  }
  return ctx;
}

nlohmann::ordered_json report_to_json(const ThinReport& rep) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["params"] = {{"p", rep.p}, {"q", rep.q},     {"k", rep.field_k},
                 {"s", rep.s}, {"lambda", rep.lambda_text}, {"modulus", rep.modulus}};
  j["horizon"] = rep.horizon;
  j["classified_to"] = rep.classified_to;
  j["dims"] = rep.dims;
  j["diamonds"] = nlohmann::ordered_json::array();
  for (const auto& rec : rep.records) {
    if (!rec.is_diamond()) continue;
    nlohmann::ordered_json dj;
    dj["degree"] = rec.degree;
    if (rec.t)
      dj["t"] = *rec.t;
    else
      dj["t"] = nullptr;
    dj["kind"] = kind_name(rec.kind);
    dj["type"] = rec.type.str();
    j["diamonds"].push_back(dj);
  }
  j["checks"] = {{"covering", rep.verdicts.covering},
                 {"thin", rep.verdicts.thin},
                 {"no_consecutive", rep.verdicts.no_consecutive},
                 {"spacing", rep.verdicts.spacing},
                 {"pattern", rep.verdicts.pattern_checked
                                 ? nlohmann::ordered_json(rep.verdicts.pattern)
                                 : nlohmann::ordered_json(nullptr)}};
  j["discrepancies"] = rep.discrepancies;
  j["warnings"] = rep.warnings;
  return j;
}

}  // namespace thinlie
