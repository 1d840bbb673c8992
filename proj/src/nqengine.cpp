#include "thinlie/nqengine.hpp"

#include <algorithm>
#include <stdexcept>

namespace thinlie {

GradedAlgebra GradedAlgebra::create(Presentation pres, EngineOptions opts) {
  if (!pres.field) throw std::invalid_argument("presentation has no field");
  for (const auto& r : pres.relators) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw std::invalid_argument("relator is not homogeneous");
    if (r.degree() < 2) throw std::invalid_argument("relator degree must be >= 2");
  }
  GradedAlgebra a;
  a.pres_ = std::move(pres);
  a.opts_ = opts;
  a.deg_.resize(2);
  a.deg_[1].dim = 2;
  a.gen_[0] = zero_vec(a.pres_.field, 2);
  a.gen_[0][0] = a.pres_.field->one();
  a.gen_[1] = zero_vec(a.pres_.field, 2);
  a.gen_[1][1] = a.pres_.field->one();
  a.computed_to_ = 1;
  return a;
}

std::size_t GradedAlgebra::dim(unsigned d) const {
  if (d < 1 || d > computed_to_) throw std::out_of_range("degree out of computed range");
  return deg_[d].dim;
}

std::vector<std::size_t> GradedAlgebra::dims() const {
  std::vector<std::size_t> r;
  for (unsigned d = 1; d <= computed_to_; ++d) r.push_back(deg_[d].dim);
  return r;
}

const BasisDef& GradedAlgebra::def(unsigned d, std::size_t i) const {
  if (d < 2 || d > computed_to_ || i >= deg_[d].dim) throw std::out_of_range("no such basis element");
  return deg_[d].defs[i];
}

LnWord GradedAlgebra::basis_word(unsigned d, std::size_t i) const {
  Word w;
  unsigned dd = d;
  std::size_t ii = i;
  while (dd >= 2) {
    const BasisDef& bd = def(dd, ii);
    w.push_back(bd.g);
    ii = bd.parent;
    --dd;
  }
  // The degree-1 root is nominal if the quotient collapsed a generator line;
  // in every thin case both generators survive and the root is exact.
  w.push_back(ii == 0 ? Gen::x : Gen::y);
  std::reverse(w.begin(), w.end());
  return LnWord(std::move(w));
}

const Mat& GradedAlgebra::act(unsigned d, Gen g) const {
  if (d < 1 || d >= computed_to_) throw std::out_of_range("action table out of range");
  return deg_[d].act[int(g)];
}

HomElement GradedAlgebra::zero_element(unsigned d) const {
  if (d < 1 || d > computed_to_) throw std::out_of_range("degree out of computed range");
  return {d, zero_vec(pres_.field, deg_[d].dim)};
}

HomElement GradedAlgebra::unit_element(unsigned d, std::size_t i) const {
  HomElement e = zero_element(d);
  if (i >= e.coords.size()) throw std::out_of_range("no such basis element");
  e.coords[i] = pres_.field->one();
  return e;
}

HomElement GradedAlgebra::act_elem(const HomElement& u, Gen g) const {
  return {u.degree + 1, mat_apply(u.coords, act(u.degree, g))};
}

HomElement GradedAlgebra::evaluate(const LnWord& w) const {
  if (w.degree() > computed_to_) throw std::out_of_range("word degree exceeds computed range");
  const auto& letters = w.letters();
  HomElement e{1, gen_[int(letters[0])]};
  for (std::size_t i = 1; i < letters.size(); ++i) e = act_elem(e, letters[i]);
  return e;
}

HomElement GradedAlgebra::evaluate(const BracketExpr& expr) const {
  if (expr.is_zero()) throw std::invalid_argument("cannot evaluate the zero expression without a degree");
  const unsigned d = expr.degree();
  HomElement r = zero_element(d);
  for (const auto& t : expr.terms()) {
    HomElement w = evaluate(t.word);
    vec_add_scaled(r.coords, t.coeff, w.coords);
  }
  return r;
}

std::pair<Fel, Fel> GradedAlgebra::decompose_degree1(const Vec& v) const {
  const FieldPtr& f = pres_.field;
  // Solve a*gen_x + b*gen_y = v; the generators span degree 1, so the
  // augmented n x 3 system [gx | gy | v] is consistent.
  const std::size_t n = deg_[1].dim;
  std::vector<Vec> sys;
  for (std::size_t j = 0; j < n; ++j) {
    Vec row = zero_vec(f, 3);
    row[0] = gen_[0][j];
    row[1] = gen_[1][j];
    row[2] = v[j];
    sys.push_back(std::move(row));
  }
  rref(sys, f);
  Fel a = f->zero(), b = f->zero();
  for (const auto& row : sys) {
    if (!row[0].is_zero())
      a = row[2];
    else if (!row[1].is_zero())
      b = row[2];
    else if (!row[2].is_zero())
      throw std::logic_error("degree-1 element outside the generator span");
  }
  return {a, b};
}

const Mat& GradedAlgebra::adjoint(AdjCache& cache, unsigned e, unsigned dt, std::size_t it) const {
  const AdjKey key{dt, it, e};
  auto found = cache.m.find(key);
  if (found != cache.m.end()) return found->second;
  Mat r;
  if (dt == 1) {
    auto [a, b] = decompose_degree1(unit_element(1, it).coords);
    r = act(e, Gen::x).scaled(a).add(act(e, Gen::y).scaled(b));
  } else {
    const BasisDef& d = def(dt, it);
    const Mat& rw_e = adjoint(cache, e, dt - 1, d.parent);
    const Mat& rw_e1 = adjoint(cache, e + 1, dt - 1, d.parent);
    // [u, [w, g]] = [[u, w], g] - [[u, g], w]
    r = rw_e.mul(act(e + dt - 1, d.g)).sub(act(e, d.g).mul(rw_e1));
  }
  return cache.m.emplace(key, std::move(r)).first->second;
}

Vec GradedAlgebra::bracket_vec(AdjCache& cache, const Vec& u, unsigned du, const Vec& v,
                               unsigned dv) const {
  const FieldPtr& f = pres_.field;
  if (du + dv > computed_to_) throw std::out_of_range("bracket degree exceeds computed range");
  Vec r = zero_vec(f, deg_[du + dv].dim);
  if (vec_is_zero(u) || vec_is_zero(v)) return r;
  if (dv == 1) {
    auto [a, b] = decompose_degree1(v);
    if (!a.is_zero()) vec_add_scaled(r, a, mat_apply(u, act(du, Gen::x)));
    if (!b.is_zero()) vec_add_scaled(r, b, mat_apply(u, act(du, Gen::y)));
    return r;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    vec_add_scaled(r, v[i], mat_apply(u, adjoint(cache, du, dv, i)));
  }
  return r;
}

HomElement GradedAlgebra::bracket(const HomElement& u, const HomElement& v) const {
  AdjCache cache;
  return {u.degree + v.degree, bracket_vec(cache, u.coords, u.degree, v.coords, v.degree)};
}

HomElement GradedAlgebra::bracket(const HomElement& u, const HomElement& v,
                                  BracketCache& cache) const {
  return {u.degree + v.degree, bracket_vec(cache.impl_, u.coords, u.degree, v.coords, v.degree)};
}

void GradedAlgebra::extend_to(unsigned D) {
  if (!extendable_) throw std::logic_error("algebra is frozen (quotient); cannot extend");
  if (D < 2) throw std::invalid_argument("extend_to needs D >= 2");
  if (D > opts_.degree_cap)
    throw std::invalid_argument("degree cap exceeded (" + std::to_string(opts_.degree_cap) + ")");
  if (D <= computed_to_) return;
  deg_.resize(D + 1);
  for (unsigned d = computed_to_ + 1; d <= D; ++d) {
    if (finite_at_) {
      deg_[d].dim = 0;
      deg_[d - 1].act[0] = Mat(pres_.field, deg_[d - 1].dim, 0);
      deg_[d - 1].act[1] = Mat(pres_.field, deg_[d - 1].dim, 0);
      computed_to_ = d;
      continue;
    }
    extend_one(d);
    if (deg_[d].dim == 0 && !finite_at_) finite_at_ = d;
  }
}

void GradedAlgebra::extend_one(unsigned d) {
  const FieldPtr& f = pres_.field;
  const std::size_t n_prev = deg_[d - 1].dim;
  const std::size_t nc = 2 * n_prev;

  // Provisional state: the candidate symbols (b, g) act as a basis of degree
  // d, so evaluate/bracket work uniformly while rows are assembled.
  deg_[d].dim = nc;
  deg_[d].defs.clear();
  for (std::size_t b = 0; b < n_prev; ++b)
    for (Gen g : {Gen::x, Gen::y}) deg_[d].defs.push_back({std::uint32_t(b), g});
  for (Gen g : {Gen::x, Gen::y}) {
    Mat scatter(f, n_prev, nc);
    for (std::size_t b = 0; b < n_prev; ++b) scatter.at(b, 2 * b + std::size_t(g)) = f->one();
    deg_[d - 1].act[int(g)] = std::move(scatter);
  }
  computed_to_ = d;

  std::vector<Vec> rows;
  AdjCache cache;
  if (d == 2) {
    // alternating rows: [x,x] = 0, [y,y] = 0, [x,y] + [y,x] = 0
    Vec r1 = zero_vec(f, nc), r2 = zero_vec(f, nc), r3 = zero_vec(f, nc);
    r1[0] = f->one();
    r2[3] = f->one();
    r3[1] = f->one();
    r3[2] = f->one();
    rows.push_back(std::move(r1));
    rows.push_back(std::move(r2));
    rows.push_back(std::move(r3));
  } else {
    // Consistency rows J(u) for u in the basis of degree d-2: the two
    // evaluations of [u, [x, y]] must agree, i.e.
    // [[u,x],y] - [[u,y],x] + [[x,y], u] = 0.
    Word zw{Gen::x, Gen::y};
    const HomElement z = evaluate(LnWord(zw));
    for (std::size_t ui = 0; ui < deg_[d - 2].dim; ++ui) {
      const Vec u = unit_element(d - 2, ui).coords;
      Vec r = mat_apply(mat_apply(u, act(d - 2, Gen::x)), act(d - 1, Gen::y));
      Vec r2 = mat_apply(mat_apply(u, act(d - 2, Gen::y)), act(d - 1, Gen::x));
      for (std::size_t j = 0; j < nc; ++j) r[j] -= r2[j];
      Vec zb = bracket_vec(cache, z.coords, 2, u, d - 2);
      for (std::size_t j = 0; j < nc; ++j) r[j] += zb[j];
      if (!vec_is_zero(r)) rows.push_back(std::move(r));
    }
    // Jacobi rows [[u,t],g] - [[u,g],t] - [u,[t,g]] for basis t of degree
    // >= 2. Together with the J(u) rows above these pin the Lie structure:
    // the (u,x,y) rows alone under-constrain once relators create tails
    // (checked against the brute-force oracle).
    for (unsigned dt = 2; dt + 2 <= d; ++dt) {
      const unsigned du = d - 1 - dt;
      for (std::size_t ti = 0; ti < deg_[dt].dim; ++ti) {
        const Vec t = unit_element(dt, ti).coords;
        for (std::size_t ui = 0; ui < deg_[du].dim; ++ui) {
          const Vec u = unit_element(du, ui).coords;
          for (Gen g : {Gen::x, Gen::y}) {
            Vec a = mat_apply(bracket_vec(cache, u, du, t, dt), act(du + dt, g));
            Vec b = bracket_vec(cache, mat_apply(u, act(du, g)), du + 1, t, dt);
            Vec c = bracket_vec(cache, u, du, mat_apply(t, act(dt, g)), dt + 1);
            Vec r = a;
            for (std::size_t j = 0; j < nc; ++j) r[j] = a[j] - b[j] - c[j];
            if (!vec_is_zero(r)) rows.push_back(std::move(r));
          }
        }
      }
    }
    if (opts_.full_consistency) {
      // antisymmetry rows [u,t] + [t,u] for basis pairs of degree >= 2
      for (unsigned du = 2; 2 * du <= d; ++du) {
        const unsigned dv = d - du;
        if (dv < 2 || dv < du) continue;
        for (std::size_t ui = 0; ui < deg_[du].dim; ++ui)
          for (std::size_t vi = 0; vi < deg_[dv].dim; ++vi) {
            const Vec u = unit_element(du, ui).coords;
            const Vec v = unit_element(dv, vi).coords;
            Vec r = bracket_vec(cache, u, du, v, dv);
            Vec s = bracket_vec(cache, v, dv, u, du);
            for (std::size_t j = 0; j < nc; ++j) r[j] += s[j];
            if (!vec_is_zero(r)) rows.push_back(std::move(r));
          }
      }
    }
  }
  for (const auto& rel : pres_.relators) {
    if (rel.is_zero() || rel.degree() != d) continue;
    Vec r = evaluate(rel).coords;
    if (!vec_is_zero(r)) rows.push_back(std::move(r));
  }

  const auto pivots = rref(rows, f);
  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivots) is_pivot[c] = true;

  const std::size_t dim_d = nc - pivots.size();
  std::vector<std::size_t> basis_pos(nc, SIZE_MAX);
  std::vector<BasisDef> defs;
  {
    std::size_t next = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      if (is_pivot[c]) continue;
      basis_pos[c] = next++;
      defs.push_back({std::uint32_t(c / 2), Gen(c % 2)});
    }
  }
  // candidate -> final coordinates
  std::vector<Vec> candmap(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    candmap[c] = zero_vec(f, dim_d);
    if (!is_pivot[c]) candmap[c][basis_pos[c]] = f->one();
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t pc = pivots[i];
    for (std::size_t l = 0; l < nc; ++l) {
      if (l == pc || is_pivot[l] || rows[i][l].is_zero()) continue;
      candmap[pc][basis_pos[l]] = -rows[i][l];
    }
  }

  deg_[d].dim = dim_d;
  deg_[d].defs = std::move(defs);
  for (Gen g : {Gen::x, Gen::y}) {
    Mat m(f, n_prev, dim_d);
    for (std::size_t b = 0; b < n_prev; ++b) m.set_row(b, candmap[2 * b + std::size_t(g)]);
    deg_[d - 1].act[int(g)] = std::move(m);
  }
}

std::vector<Vec> GradedAlgebra::graded_centre(unsigned d) const {
  if (d < 1 || d > computed_to_) throw std::out_of_range("degree out of computed range");
  if (d + 1 > computed_to_)
    throw std::out_of_range("graded centre at the truncation boundary: no room to test");
  const FieldPtr& f = pres_.field;
  const std::size_t n = deg_[d].dim, m = deg_[d + 1].dim;
  Mat both(f, n, 2 * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      both.at(i, j) = act(d, Gen::x).at(i, j);
      both.at(i, m + j) = act(d, Gen::y).at(i, j);
    }
  return left_kernel(both, f);
}

GradedAlgebra GradedAlgebra::quotient_once(const GradedAlgebra& a, unsigned horizon) {
  if (horizon < 1 || horizon + 1 > a.computed_to_)
    throw std::out_of_range("central quotient horizon must satisfy horizon <= computed_to - 1");
  const FieldPtr& f = a.pres_.field;

  // Centre slices as RREF rows per degree (1..horizon), plus pivot masks.
  std::vector<std::vector<Vec>> zrows(horizon + 1);
  std::vector<std::vector<std::size_t>> zpiv(horizon + 1);
  for (unsigned d = 1; d <= horizon; ++d) {
    zrows[d] = a.graded_centre(d);
    zpiv[d] = rref(zrows[d], f);
  }
  // reduce mod the centre slice
  auto project = [&](unsigned d, Vec v) {
    for (std::size_t i = 0; i < zpiv[d].size(); ++i) {
      const Fel c = v[zpiv[d][i]];
      if (!c.is_zero()) vec_add_scaled(v, -c, zrows[d][i]);
    }
    return v;
  };

  GradedAlgebra q;
  q.pres_ = a.pres_;
  q.opts_ = a.opts_;
  q.quotient_depth_ = a.quotient_depth_ + 1;
  q.extendable_ = false;
  q.finite_at_ = std::nullopt;
  q.deg_.resize(horizon + 1);
  q.computed_to_ = horizon;
  if (!a.pres_.label.empty()) q.pres_.label = a.pres_.label + "/Z";

  // Chosen new basis per degree, each realized as a vector in a's
  // coordinates; definitions are rebuilt so they keep spelling left-normed
  // words (a surviving element's parent always survives).
  std::vector<std::vector<Vec>> realize(horizon + 1);
  std::vector<Mat> tinv(horizon + 1);  // new-basis coords <- projected a-coords

  for (unsigned d = 1; d <= horizon; ++d) {
    std::vector<Vec> chosen_rows;  // projected images, for rank tracking
    std::vector<Vec> chosen_real;
    std::vector<BasisDef> defs;
    auto try_add = [&](const Vec& realization, BasisDef bd) {
      Vec img = project(d, realization);
      if (vec_is_zero(img)) return;
      std::vector<Vec> test = chosen_rows;
      test.push_back(img);
      if (rank_of(std::move(test), f) <= chosen_rows.size()) return;
      chosen_rows.push_back(img);
      chosen_real.push_back(realization);
      if (d >= 2) defs.push_back(bd);
    };
    if (d == 1) {
      for (std::size_t i = 0; i < a.deg_[1].dim; ++i)
        try_add(Vec(a.unit_element(1, i).coords), {0, Gen::x});
    } else {
      for (std::size_t b = 0; b < realize[d - 1].size(); ++b)
        for (Gen g : {Gen::x, Gen::y})
          try_add(mat_apply(realize[d - 1][b], a.act(d - 1, g)), {std::uint32_t(b), g});
    }
    realize[d] = chosen_real;
    q.deg_[d].dim = chosen_rows.size();
    q.deg_[d].defs = std::move(defs);
    // transformation: projected a-coords -> chosen-basis coords
    const std::size_t m = chosen_rows.size();
    const std::size_t n = a.deg_[d].dim;
    // survivors coordinates: columns not pivoted by the centre
    std::vector<std::size_t> free_cols;
    {
      std::vector<bool> isp(n, false);
      for (auto c : zpiv[d]) isp[c] = true;
      for (std::size_t cidx = 0; cidx < n; ++cidx)
        if (!isp[cidx]) free_cols.push_back(cidx);
    }
    if (m != free_cols.size())
      throw std::logic_error("central quotient: basis selection lost rank");
    Mat t(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) t.at(i, j) = chosen_rows[i][free_cols[j]];
    // projected vector -> coefficients over the chosen basis: solve
    // c * T = v_restricted, i.e. c = v_restricted * T^{-1}
    tinv[d] = inverse(t, f);
    // top-degree placeholder; overwritten once degree d+1 exists
    q.deg_[d].act[0] = Mat(f, m, 0);
    q.deg_[d].act[1] = Mat(f, m, 0);
    if (d >= 2) {
      // convert realized actions of the previous degree now
      const std::size_t mp = q.deg_[d - 1].dim;
      for (Gen g : {Gen::x, Gen::y}) {
        Mat m2(f, mp, m);
        for (std::size_t b = 0; b < mp; ++b) {
          Vec img = project(d, mat_apply(realize[d - 1][b], a.act(d - 1, g)));
          Vec restricted = zero_vec(f, m);
          for (std::size_t j = 0; j < m; ++j) restricted[j] = img[free_cols[j]];
          m2.set_row(b, mat_apply(restricted, tinv[d]));
        }
        q.deg_[d - 1].act[int(g)] = std::move(m2);
      }
    }
    if (d == 1) {
      for (int g = 0; g < 2; ++g) {
        Vec img = project(1, a.gen_[g]);
        Vec restricted = zero_vec(f, m);
        for (std::size_t j = 0; j < m; ++j) restricted[j] = img[free_cols[j]];
        q.gen_[g] = mat_apply(restricted, tinv[1]);
      }
    }
    if (q.deg_[d].dim == 0 && !q.finite_at_) q.finite_at_ = d;
  }
  return q;
}

GradedAlgebra GradedAlgebra::central_quotient(unsigned horizon, unsigned iterations) const {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  GradedAlgebra q = quotient_once(*this, horizon);
  for (unsigned it = 2; it <= iterations; ++it) q = quotient_once(q, q.computed_to_ - 1);
  // post-check: the quotient should already be centreless below its horizon
  for (unsigned d = 1; d + 1 <= q.computed_to_; ++d) {
    if (q.deg_[d].dim == 0) continue;
    if (!q.graded_centre(d).empty()) {
      q.warnings_.push_back("graded centre of the quotient is nontrivial in degree " +
                            std::to_string(d));
    }
  }
  return q;
}

nlohmann::ordered_json GradedAlgebra::dump() const {
  nlohmann::ordered_json j;
  j["format"] = "thinlie-algebra";
  j["version"] = 1;
  j["field"] = {{"p", pres_.field->p()}, {"k", pres_.field->k()}, {"modulus", pres_.field->modulus()}};
  j["q"] = pres_.q;
  j["s"] = pres_.s;
  j["lambda"] = pres_.lambda ? pres_.lambda->str() : "0";
  j["label"] = pres_.label;
  j["relators"] = nlohmann::ordered_json::array();
  for (const auto& r : pres_.relators) j["relators"].push_back(emit_expr(r));
  j["full_consistency"] = opts_.full_consistency;
  j["quotient_depth"] = quotient_depth_;
  j["computed_to"] = computed_to_;
  if (finite_at_)
    j["finite_at"] = *finite_at_;
  else
    j["finite_at"] = nullptr;
  j["gen_coords"] = nlohmann::ordered_json::array();
  for (int g = 0; g < 2; ++g) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& c : gen_[g]) row.push_back(c.str());
    j["gen_coords"].push_back(row);
  }
  j["degrees"] = nlohmann::ordered_json::array();
  for (unsigned d = 1; d <= computed_to_; ++d) {
    nlohmann::ordered_json dj;
    dj["d"] = d;
    dj["dim"] = deg_[d].dim;
    if (d >= 2) {
      dj["defs"] = nlohmann::ordered_json::array();
      for (const auto& b : deg_[d].defs)
        dj["defs"].push_back({b.parent, std::string(1, gen_char(b.g))});
    }
    if (d < computed_to_) {
      for (Gen g : {Gen::x, Gen::y}) {
        nlohmann::ordered_json am = nlohmann::ordered_json::array();
        const Mat& m = deg_[d].act[int(g)];
        for (std::size_t r = 0; r < m.rows(); ++r) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
          am.push_back(row);
        }
        dj[g == Gen::x ? "act_x" : "act_y"] = am;
      }
    }
    j["degrees"].push_back(dj);
  }
  return j;
}

GradedAlgebra GradedAlgebra::load(const nlohmann::ordered_json& j) {
  if (j.value("format", "") != "thinlie-algebra")
    throw std::invalid_argument("not a thinlie algebra dump");
  if (j.value("version", 0) != 1) throw std::invalid_argument("unsupported dump version");
  GradedAlgebra a;
  const auto& fj = j.at("field");
  a.pres_.field = Field::make(fj.at("p").get<std::uint64_t>(), fj.at("k").get<unsigned>(),
                              fj.at("modulus").get<std::vector<std::uint64_t>>());
  a.pres_.q = j.value("q", std::uint64_t{0});
  a.pres_.s = j.value("s", std::uint64_t{0});
  a.pres_.lambda = a.pres_.field->parse(j.value("lambda", "0"));
  a.pres_.label = j.value("label", "");
  VContext ctx(a.pres_.q >= 7 ? a.pres_.q : 7);
  for (const auto& r : j.at("relators"))
    a.pres_.relators.push_back(parse_expr(r.get<std::string>(), ctx, a.pres_.field, true));
  a.opts_.full_consistency = j.value("full_consistency", false);
  a.quotient_depth_ = j.value("quotient_depth", 0u);
  a.extendable_ = a.quotient_depth_ == 0;
  a.computed_to_ = j.at("computed_to").get<unsigned>();
  if (!j.at("finite_at").is_null()) a.finite_at_ = j.at("finite_at").get<unsigned>();
  a.deg_.resize(a.computed_to_ + 1);
  for (const auto& dj : j.at("degrees")) {
    const unsigned d = dj.at("d").get<unsigned>();
    auto& dd = a.deg_.at(d);
    dd.dim = dj.at("dim").get<std::size_t>();
    if (d >= 2)
      for (const auto& bj : dj.at("defs"))
        dd.defs.push_back(
            {bj.at(0).get<std::uint32_t>(), bj.at(1).get<std::string>() == "x" ? Gen::x : Gen::y});
  }
  for (int g = 0; g < 2; ++g) {
    a.gen_[g].clear();
    for (const auto& c : j.at("gen_coords").at(g))
      a.gen_[g].push_back(a.pres_.field->parse(c.get<std::string>()));
  }
  for (const auto& dj : j.at("degrees")) {
    const unsigned d = dj.at("d").get<unsigned>();
    if (d >= a.computed_to_) continue;
    auto& dd = a.deg_.at(d);
    for (Gen g : {Gen::x, Gen::y}) {
      const auto& am = dj.at(g == Gen::x ? "act_x" : "act_y");
      Mat m(a.pres_.field, dd.dim, a.deg_.at(d + 1).dim);
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          m.at(r, c) = a.pres_.field->parse(am.at(r).at(c).get<std::string>());
      dd.act[int(g)] = std::move(m);
    }
  }
  return a;
}

}  // namespace thinlie
