#include "thinlie/identity_verifier.hpp"

#include <algorithm>
#include <sstream>

#include "thinlie/combinatorics.hpp"

namespace thinlie {

namespace {

// [u, v] written over left-normed words: single-letter right factors
// concatenate, compound ones expand by [u, [v', g]] = [[u, v'], g] - [[u, g], v'].
void word_bracket_expand(const Word& u, const Word& v, const Fel& coeff,
                         std::vector<Term>& out) {
  if (v.size() == 1) {
    Word w = u;
    w.push_back(v[0]);
    out.push_back({coeff, LnWord(std::move(w))});
    return;
  }
  Word head(v.begin(), v.end() - 1);
  const Gen g = v.back();
  Word ug = u;
  ug.push_back(g);
  // [[u, v'], g]: expand [u, v'] first, then append g to every word
  std::vector<Term> inner;
  word_bracket_expand(u, head, coeff, inner);
  for (auto& t : inner) {
    Word w = t.word.letters();
    w.push_back(g);
    out.push_back({t.coeff, LnWord(std::move(w))});
  }
  word_bracket_expand(ug, head, -coeff, out);
}

}  // namespace

BracketExpr gen_jacobi_expand(const LnWord& a, const LnWord& b, Gen c, unsigned n,
                              const FieldPtr& field) {
  std::vector<Term> terms;
  for (unsigned i = 0; i <= n; ++i) {
    const std::uint64_t bin = binom_mod_p(n, i, field->p());
    Fel coeff = field->from_int(std::int64_t(bin));
    if (i % 2 == 1) coeff = -coeff;
    if (coeff.is_zero()) continue;
    Word head = a.letters();
    head.insert(head.end(), std::size_t(i), c);
    std::vector<Term> part;
    word_bracket_expand(head, b.letters(), coeff, part);
    for (auto& t : part) {
      Word w = t.word.letters();
      w.insert(w.end(), std::size_t(n - i), c);
      terms.push_back({t.coeff, LnWord(std::move(w))});
    }
  }
  return BracketExpr(std::move(terms));
}

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& i : items) n += !i.vacuous && !i.pass;
  return n;
}

std::size_t SuiteResult::vacuous_count() const {
  std::size_t n = 0;
  for (const auto& i : items) n += i.vacuous;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "lemma_v1", "cor_v1x",    "lemma_v2", "lemma_v2ext", "remarks_mu0", "lemma_va1",
      "compact_vk", "sandwich", "chain",    "chain_N",     "no_consec"};
  return names;
}

namespace {

std::string coords_str(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
  os << ')';
  return os.str();
}

struct Ctx {
  const GradedAlgebra& L;
  const GradedAlgebra* N;
  const ThinReport& rep;
  FieldPtr f;
  std::uint64_t q;
  VContext vctx;
  unsigned hor;
  std::optional<unsigned> at;
  SuiteResult out;

  Ctx(const GradedAlgebra& l, const GradedAlgebra* n, const ThinReport& r, std::string suite,
      std::optional<unsigned> at_)
      : L(l), N(n), rep(r), f(l.field()), q(r.q), vctx(report_vcontext(r)), hor(l.computed_to()),
        at(at_) {
    out.suite = std::move(suite);
  }

  bool site_selected(unsigned k) const { return !at || *at == k; }

  const DiamondRecord* slot(unsigned t) const {
    if (t < 1) return nullptr;
    const std::uint64_t m = std::uint64_t(t) * (q - 1) + 1;
    if (m > rep.classified_to) return nullptr;
    return &rep.at(unsigned(m));
  }
  /// largest t with slot(t) available
  unsigned max_slot() const { return unsigned((rep.classified_to - 1) / (q - 1)); }

  Word vw(unsigned k) const { return vword(k, vctx).letters(); }
  static Word cat(Word w, std::initializer_list<Gen> tail) {
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  }
  static Word cat_xrun(Word w, std::initializer_list<Gen> pre, std::size_t xs,
                       std::initializer_list<Gen> post) {
    w.insert(w.end(), pre.begin(), pre.end());
    w.insert(w.end(), xs, Gen::x);
    w.insert(w.end(), post.begin(), post.end());
    return w;
  }

  HomElement ev(const Word& w) const { return L.evaluate(LnWord(w)); }

  HomElement lin(std::initializer_list<std::pair<Fel, Word>> parts) const {
    HomElement r;
    bool first = true;
    for (const auto& [c, w] : parts) {
      HomElement e = ev(w);
      if (first) {
        r = L.zero_element(e.degree);
        first = false;
      }
      vec_add_scaled(r.coords, c, e.coords);
    }
    return r;
  }

  void check(const std::string& label, unsigned site_k, const HomElement& lhs,
             const HomElement& rhs) {
    IdentityResult res;
    res.label = label;
    res.site = "k=" + std::to_string(site_k);
    res.lhs = coords_str(lhs.coords);
    res.rhs = coords_str(rhs.coords);
    res.pass = lhs.degree == rhs.degree && lhs.coords == rhs.coords;
    out.items.push_back(std::move(res));
  }

  void vacuous(const std::string& label, unsigned site_k, const std::string& why) {
    IdentityResult res;
    res.label = label;
    res.site = "k=" + std::to_string(site_k);
    res.vacuous = true;
    res.note = why;
    out.items.push_back(std::move(res));
  }

  Fel mu_inv(const TypeVal& t) const {
    if (t.tag == TypeVal::Tag::infinite) return f->zero();
    if (t.tag == TypeVal::Tag::finite && !t.mu.is_zero()) return t.mu.inv();
    throw std::logic_error("mu_inv needs a nonzero or infinite type");
  }
};

// ---- lemma_v1 / cor_v1x -------------------------------------------------
// hypotheses: diamond at slot k with type mu != 0 (infinite, finite nonzero,
// or the fake type 1); equations relate the actions of v1 and [v1 x].

bool v1_site_gate(const Ctx& c, unsigned k, std::string& why, TypeVal& mu) {
  const DiamondRecord* r = c.slot(k);
  if (!r) {
    why = "slot beyond horizon";
    return false;
  }
  if (r->kind == DiamondKind::genuine || r->kind == DiamondKind::fake1) {
    mu = r->type;
    if (mu.tag == TypeVal::Tag::finite && mu.mu.is_zero()) {
      why = "type 0 (covered by remarks_mu0)";
      return false;
    }
    return true;
  }
  why = "slot is " + kind_name(r->kind) + " (needs a diamond of nonzero type)";
  return false;
}

void run_lemma_v1(Ctx& c) {
  const std::uint64_t q = c.q;
  for (unsigned k = 1; k <= c.max_slot(); ++k) {
    if (!c.site_selected(k)) continue;
    const unsigned maxdeg = unsigned((k + 1) * (q - 1) + 3);
    if (maxdeg > c.hor) {
      if (c.at) throw std::out_of_range("site k=" + std::to_string(k) + " exceeds the horizon");
      continue;
    }
    std::string why;
    TypeVal mu;
    if (!v1_site_gate(c, k, why, mu)) {
      c.vacuous("lemma_v1", k, why);
      continue;
    }
    const Fel mi = c.mu_inv(mu);
    const Fel one = c.f->one(), two = c.f->from_int(2), three = c.f->from_int(3);
    const Word vk = c.vw(k), vk1 = c.vw(k + 1);
    const HomElement v1 = c.ev(c.vw(1));
    c.check("[vk v1] = (mu^-1+1) v_{k+1}", k, c.L.bracket(c.ev(vk), v1),
            c.lin({{mi + one, vk1}}));
    c.check("[vk x v1] = [v_{k+1} x]", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x})), v1),
            c.lin({{one, Ctx::cat(vk1, {Gen::x})}}));
    c.check("[vk y v1] = (1-mu^-1)[v_{k+1} y]", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v1),
            c.lin({{one - mi, Ctx::cat(vk1, {Gen::y})}}));
    c.check("[vk xy v1] = -(2[v_{k+1} yx] + [v_{k+1} xy])", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y})), v1),
            c.lin({{-two, Ctx::cat(vk1, {Gen::y, Gen::x})}, {-one, Ctx::cat(vk1, {Gen::x, Gen::y})}}));
    c.check("[vk xyx v1] = -(3[v_{k+1} yx^2] + 2[v_{k+1} xyx])", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y, Gen::x})), v1),
            c.lin({{-three, Ctx::cat(vk1, {Gen::y, Gen::x, Gen::x})},
                   {-two, Ctx::cat(vk1, {Gen::x, Gen::y, Gen::x})}}));
  }
}

void run_cor_v1x(Ctx& c) {
  const std::uint64_t q = c.q;
  for (unsigned k = 1; k <= c.max_slot(); ++k) {
    if (!c.site_selected(k)) continue;
    const unsigned maxdeg = unsigned((k + 1) * (q - 1) + 3);
    if (maxdeg > c.hor) {
      if (c.at) throw std::out_of_range("site k=" + std::to_string(k) + " exceeds the horizon");
      continue;
    }
    std::string why;
    TypeVal mu;
    if (!v1_site_gate(c, k, why, mu)) {
      c.vacuous("cor_v1x", k, why);
      continue;
    }
    const Fel mi = c.mu_inv(mu);
    const Fel one = c.f->one();
    const Word vk = c.vw(k), vk1 = c.vw(k + 1);
    const HomElement v1x = c.ev(Ctx::cat(c.vw(1), {Gen::x}));
    c.check("[vk [v1 x]] = mu^-1 [v_{k+1} x]", k, c.L.bracket(c.ev(vk), v1x),
            c.lin({{mi, Ctx::cat(vk1, {Gen::x})}}));
    c.check("[vk x [v1 x]] = 0", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x})), v1x),
            c.L.zero_element(unsigned(k * (q - 1) + 1 + q)));
    c.check("[vk y [v1 x]] = (mu^-1-1)([v_{k+1} yx] + [v_{k+1} xy])", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v1x),
            c.lin({{mi - one, Ctx::cat(vk1, {Gen::y, Gen::x})},
                   {mi - one, Ctx::cat(vk1, {Gen::x, Gen::y})}}));
    c.check("[vk xy [v1 x]] = [v_{k+1} yx^2] + [v_{k+1} xyx]", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y})), v1x),
            c.lin({{one, Ctx::cat(vk1, {Gen::y, Gen::x, Gen::x})},
                   {one, Ctx::cat(vk1, {Gen::x, Gen::y, Gen::x})}}));
  }
}

// ---- lemma_v2 -----------------------------------------------------------
// hypotheses: slot k of type mu != 0, slot k+1 of infinite type.

void run_lemma_v2(Ctx& c) {
  const std::uint64_t q = c.q;
  for (unsigned k = 1; k + 1 <= c.max_slot(); ++k) {
    if (!c.site_selected(k)) continue;
    const unsigned maxdeg = unsigned((k + 2) * (q - 1) + q - 2);
    if (maxdeg > c.hor) {
      if (c.at) throw std::out_of_range("site k=" + std::to_string(k) + " exceeds the horizon");
      continue;
    }
    std::string why;
    TypeVal mu;
    if (!v1_site_gate(c, k, why, mu)) {
      c.vacuous("lemma_v2", k, why);
      continue;
    }
    const DiamondRecord* next = c.slot(k + 1);
    if (!next || next->type.tag != TypeVal::Tag::infinite) {
      c.vacuous("lemma_v2", k, "slot k+1 is not of infinite type");
      continue;
    }
    const Fel mi = c.mu_inv(mu);
    const Fel one = c.f->one(), two = c.f->from_int(2), three = c.f->from_int(3);
    const Word vk = c.vw(k), vk1 = c.vw(k + 1), vk2 = c.vw(k + 2);
    const HomElement v1 = c.ev(c.vw(1));
    const HomElement v2 = c.ev(c.vw(2));
    const HomElement v1x = c.ev(Ctx::cat(c.vw(1), {Gen::x}));
    c.check("[vk v2] = mu^-1 v_{k+2}", k, c.L.bracket(c.ev(vk), v2), c.lin({{mi, vk2}}));
    c.check("[vk x v2] = 0", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x})), v2),
            c.L.zero_element(unsigned((k + 2) * (q - 1) + 1)));
    c.check("[vk y v2] = 0", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v2),
            c.L.zero_element(unsigned((k + 2) * (q - 1) + 1)));
    c.check("[vk xy v2] = [v_{k+2} yx] + [v_{k+2} xy]", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y})), v2),
            c.lin({{one, Ctx::cat(vk2, {Gen::y, Gen::x})}, {one, Ctx::cat(vk2, {Gen::x, Gen::y})}}));
    c.check("[vk xyx v2] = 2([v_{k+2} yx^2] + [v_{k+2} xyx])", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y, Gen::x})), v2),
            c.lin({{two, Ctx::cat(vk2, {Gen::y, Gen::x, Gen::x})},
                   {two, Ctx::cat(vk2, {Gen::x, Gen::y, Gen::x})}}));
    const Word vk_tail = Ctx::cat_xrun(vk, {Gen::x, Gen::y}, std::size_t(q - 4), {});
    c.check("[vk xyx^{q-4} v1] = [v_{k+1} xyx^{q-4}]", k, c.L.bracket(c.ev(vk_tail), v1),
            c.lin({{one, Ctx::cat_xrun(vk1, {Gen::x, Gen::y}, std::size_t(q - 4), {})}}));
    c.check("[vk xyx^{q-4} [v1 x]] = 0", k, c.L.bracket(c.ev(vk_tail), v1x),
            c.L.zero_element(unsigned(k * (q - 1) + q - 2 + q)));
    c.check("[vk xyx^{q-4} v2] = -3([v_{k+2} yx^{q-3}] + [v_{k+2} xyx^{q-4}])", k,
            c.L.bracket(c.ev(vk_tail), v2),
            c.lin({{-three, Ctx::cat_xrun(vk2, {Gen::y}, std::size_t(q - 3), {})},
                   {-three, Ctx::cat_xrun(vk2, {Gen::x, Gen::y}, std::size_t(q - 4), {})}}));
  }
}

// ---- lemma_v2ext --------------------------------------------------------
// hypotheses: slot k of infinite type, slot k+1 of finite type mu != 0.

void run_lemma_v2ext(Ctx& c) {
  const std::uint64_t q = c.q;
  for (unsigned k = 1; k + 1 <= c.max_slot(); ++k) {
    if (!c.site_selected(k)) continue;
    const unsigned maxdeg = unsigned((k + 2) * (q - 1) + 3);
    if (maxdeg > c.hor) {
      if (c.at) throw std::out_of_range("site k=" + std::to_string(k) + " exceeds the horizon");
      continue;
    }
    const DiamondRecord* rk = c.slot(k);
    const DiamondRecord* rk1 = c.slot(k + 1);
    if (!rk || rk->type.tag != TypeVal::Tag::infinite) {
      c.vacuous("lemma_v2ext", k, "slot k is not of infinite type");
      continue;
    }
    if (!rk1 || rk1->type.tag != TypeVal::Tag::finite || rk1->type.mu.is_zero()) {
      c.vacuous("lemma_v2ext", k, "slot k+1 is not of finite nonzero type");
      continue;
    }
    const Fel mi = rk1->type.mu.inv();
    const Fel one = c.f->one(), two = c.f->from_int(2), three = c.f->from_int(3);
    const Word vk = c.vw(k), vk2 = c.vw(k + 2);
    const HomElement v2 = c.ev(c.vw(2));
    c.check("[vk v2] = -2 mu^-1 v_{k+2}", k, c.L.bracket(c.ev(vk), v2),
            c.lin({{-two * mi, vk2}}));
    c.check("[vk x v2] = -mu^-1 [v_{k+2} x]", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x})), v2),
            c.lin({{-mi, Ctx::cat(vk2, {Gen::x})}}));
    c.check("[vk y v2] = -mu^-1 [v_{k+2} y]", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v2),
            c.lin({{-mi, Ctx::cat(vk2, {Gen::y})}}));
    c.check("[vk xy v2] = [v_{k+2} xy] + (2mu^-1+1)[v_{k+2} yx]", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y})), v2),
            c.lin({{one, Ctx::cat(vk2, {Gen::x, Gen::y})},
                   {two * mi + one, Ctx::cat(vk2, {Gen::y, Gen::x})}}));
    c.check("[vk xyx v2] = 2[v_{k+2} xyx] + (3mu^-1+2)[v_{k+2} yx^2]", k,
            c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y, Gen::x})), v2),
            c.lin({{two, Ctx::cat(vk2, {Gen::x, Gen::y, Gen::x})},
                   {three * mi + two, Ctx::cat(vk2, {Gen::y, Gen::x, Gen::x})}}));
  }
}

// ---- remarks_mu0 --------------------------------------------------------
// the mu = 0 variants: slot k fake of type 0 (so [vk x] = 0 and the next
// v element uses the shifted recursion).

void run_remarks_mu0(Ctx& c) {
  const std::uint64_t q = c.q;
  const Fel one = c.f->one(), two = c.f->from_int(2), three = c.f->from_int(3);
  for (unsigned k = 1; k <= c.max_slot(); ++k) {
    if (!c.site_selected(k)) continue;
    const DiamondRecord* rk = c.slot(k);
    if (!rk) continue;
    // variants at a type-0 slot
    if (rk->kind == DiamondKind::fake0) {
      const unsigned maxdeg = unsigned((k + 1) * (q - 1) + 3);
      if (maxdeg > c.hor) {
        if (c.at) throw std::out_of_range("site k=" + std::to_string(k) + " exceeds the horizon");
        continue;
      }
      const Word vk = c.vw(k), vk1 = c.vw(k + 1);
      const HomElement v1 = c.ev(c.vw(1));
      const HomElement v1x = c.ev(Ctx::cat(c.vw(1), {Gen::x}));
      c.check("mu=0: [vk v1] = v_{k+1}", k, c.L.bracket(c.ev(vk), v1), c.lin({{one, vk1}}));
      c.check("mu=0: [vk y v1] = -[v_{k+1} y]", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v1),
              c.lin({{-one, Ctx::cat(vk1, {Gen::y})}}));
      c.check("mu=0: [vk yx v1] = -(2[v_{k+1} yx] + [v_{k+1} xy])", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y, Gen::x})), v1),
              c.lin({{-two, Ctx::cat(vk1, {Gen::y, Gen::x})},
                     {-one, Ctx::cat(vk1, {Gen::x, Gen::y})}}));
      c.check("mu=0: [vk yx^2 v1] = -(3[v_{k+1} yx^2] + 2[v_{k+1} xyx])", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y, Gen::x, Gen::x})), v1),
              c.lin({{-three, Ctx::cat(vk1, {Gen::y, Gen::x, Gen::x})},
                     {-two, Ctx::cat(vk1, {Gen::x, Gen::y, Gen::x})}}));
      c.check("mu=0: [vk [v1 x]] = [v_{k+1} x]", k, c.L.bracket(c.ev(vk), v1x),
              c.lin({{one, Ctx::cat(vk1, {Gen::x})}}));
      c.check("mu=0: [vk y [v1 x]] = [v_{k+1} yx] + [v_{k+1} xy]", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v1x),
              c.lin({{one, Ctx::cat(vk1, {Gen::y, Gen::x})}, {one, Ctx::cat(vk1, {Gen::x, Gen::y})}}));
      c.check("mu=0: [vk yx [v1 x]] = [v_{k+1} yx^2] + [v_{k+1} xyx]", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y, Gen::x})), v1x),
              c.lin({{one, Ctx::cat(vk1, {Gen::y, Gen::x, Gen::x})},
                     {one, Ctx::cat(vk1, {Gen::x, Gen::y, Gen::x})}}));
      // v2 variant needs the next slot of infinite type
      const DiamondRecord* rk1 = c.slot(k + 1);
      const unsigned maxdeg2 = unsigned((k + 2) * (q - 1) + 3);
      if (rk1 && rk1->type.tag == TypeVal::Tag::infinite && maxdeg2 <= c.hor) {
        const Word vk2 = c.vw(k + 2);
        const HomElement v2 = c.ev(c.vw(2));
        c.check("mu=0: [vk v2] = v_{k+2}", k, c.L.bracket(c.ev(vk), v2), c.lin({{one, vk2}}));
        c.check("mu=0: [vk y v2] = 0", k, c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v2),
                c.L.zero_element(unsigned((k + 2) * (q - 1) + 1)));
        c.check("mu=0: [vk yx v2] = [v_{k+2} yx] + [v_{k+2} xy]", k,
                c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y, Gen::x})), v2),
                c.lin({{one, Ctx::cat(vk2, {Gen::y, Gen::x})},
                       {one, Ctx::cat(vk2, {Gen::x, Gen::y})}}));
        c.check("mu=0: [vk yx^2 v2] = 2([v_{k+2} yx^2] + [v_{k+2} xyx])", k,
                c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y, Gen::x, Gen::x})), v2),
                c.lin({{two, Ctx::cat(vk2, {Gen::y, Gen::x, Gen::x})},
                       {two, Ctx::cat(vk2, {Gen::x, Gen::y, Gen::x})}}));
      } else if (rk1) {
        c.vacuous("remarks_mu0 (v2 set)", k, "slot k+1 is not of infinite type");
      }
    }
    // v2ext variant: slot k infinite, slot k+1 of type 0
    const DiamondRecord* rk1 = c.slot(k + 1);
    if (rk && rk->type.tag == TypeVal::Tag::infinite && rk1 &&
        rk1->kind == DiamondKind::fake0) {
      const unsigned maxdeg = unsigned((k + 2) * (q - 1) + 3);
      if (maxdeg > c.hor) {
        if (c.at) throw std::out_of_range("site k=" + std::to_string(k) + " exceeds the horizon");
        continue;
      }
      const Word vk = c.vw(k), vk2 = c.vw(k + 2);
      const HomElement v2 = c.ev(c.vw(2));
      c.check("mu=0 ext: [vk v2] = -2 v_{k+2}", k, c.L.bracket(c.ev(vk), v2),
              c.lin({{-two, vk2}}));
      c.check("mu=0 ext: [vk x v2] = -[v_{k+2} x]", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x})), v2),
              c.lin({{-one, Ctx::cat(vk2, {Gen::x})}}));
      c.check("mu=0 ext: [vk y v2] = -[v_{k+2} y]", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::y})), v2),
              c.lin({{-one, Ctx::cat(vk2, {Gen::y})}}));
      c.check("mu=0 ext: [vk xy v2] = 2[v_{k+2} yx]", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y})), v2),
              c.lin({{two, Ctx::cat(vk2, {Gen::y, Gen::x})}}));
      c.check("mu=0 ext: [vk xyx v2] = 3[v_{k+2} yx^2]", k,
              c.L.bracket(c.ev(Ctx::cat(vk, {Gen::x, Gen::y, Gen::x})), v2),
              c.lin({{three, Ctx::cat(vk2, {Gen::y, Gen::x, Gen::x})}}));
    }
  }
  if (c.out.items.empty())
    c.vacuous("remarks_mu0", 0, "no type-0 slot within the horizon");
}

// ---- lemma_va1 ----------------------------------------------------------
// the redefined v_{a+1} = [v_a x y x^{q-2}] after a type-1 diamond, under
// the hypotheses a = 0 mod p and [L_{(a+1)(q-1)}, y] = 0.

void run_lemma_va1(Ctx& c) {
  const std::uint64_t q = c.q;
  bool any = false;
  for (unsigned a = 1; a <= c.max_slot(); ++a) {
    if (!c.site_selected(a)) continue;
    const DiamondRecord* ra = c.slot(a);
    if (!ra || ra->kind != DiamondKind::fake1) continue;
    any = true;
    const unsigned maxdeg = unsigned((a + 2) * (q - 1) + 3);
    if (maxdeg > c.hor) {
      if (c.at) throw std::out_of_range("site k=" + std::to_string(a) + " exceeds the horizon");
      c.vacuous("lemma_va1", a, "site degrees exceed the horizon");
      continue;
    }
    if (a % c.rep.p != 0) {
      c.vacuous("lemma_va1", a, "hypothesis a = 0 (mod p) fails");
      continue;
    }
    const unsigned dchk = unsigned((a + 1) * (q - 1));
    bool ychain = true;
    for (std::size_t i = 0; i < c.L.dim(dchk); ++i)
      ychain = ychain && vec_is_zero(c.L.act_elem(c.L.unit_element(dchk, i), Gen::y).coords);
    if (!ychain) {
      c.vacuous("lemma_va1", a, "hypothesis [L_{(a+1)(q-1)}, y] = 0 fails");
      continue;
    }
    const Fel one = c.f->one();
    const Word va = c.vw(a);
    Word va1 = Ctx::cat_xrun(va, {Gen::x, Gen::y}, std::size_t(q - 2), {});
    Word va2 = Ctx::cat_xrun(va1, {Gen::x, Gen::y}, std::size_t(q - 3), {});
    const HomElement v1 = c.ev(c.vw(1));
    const HomElement v2 = c.ev(c.vw(2));
    c.check("[va xyx v1] = [v_{a+1} xy]", a,
            c.L.bracket(c.ev(Ctx::cat(va, {Gen::x, Gen::y, Gen::x})), v1),
            c.lin({{one, Ctx::cat(va1, {Gen::x, Gen::y})}}));
    c.check("[va x v2] = v_{a+2}", a, c.L.bracket(c.ev(Ctx::cat(va, {Gen::x})), v2),
            c.lin({{one, va2}}));
    c.check("[va xy v2] = 0", a, c.L.bracket(c.ev(Ctx::cat(va, {Gen::x, Gen::y})), v2),
            c.L.zero_element(unsigned((a + 2) * (q - 1) + 2)));
    c.check("[va xyx v2] = [v_{a+2} yx] + [v_{a+2} xy]", a,
            c.L.bracket(c.ev(Ctx::cat(va, {Gen::x, Gen::y, Gen::x})), v2),
            c.lin({{one, Ctx::cat(va2, {Gen::y, Gen::x})}, {one, Ctx::cat(va2, {Gen::x, Gen::y})}}));
  }
  if (!any) c.vacuous("lemma_va1", 0, "no type-1 slot within the horizon");
}

// ---- compact_vk ---------------------------------------------------------
// v_k = [v_2 v_1^{k-2}] while the intervening diamonds have infinite type.

void run_compact_vk(Ctx& c) {
  const std::uint64_t q = c.q;
  bool any = false;
  for (unsigned k = 3; std::uint64_t(k) * (q - 1) <= c.hor; ++k) {
    if (!c.site_selected(k)) continue;
    bool infinite_run = true;
    for (unsigned j = 2; j + 1 <= k; ++j) {
      const DiamondRecord* r = c.slot(j);
      infinite_run = infinite_run && r && r->type.tag == TypeVal::Tag::infinite;
    }
    if (!infinite_run) {
      if (c.at) c.vacuous("compact_vk", k, "an intervening slot is not of infinite type");
      continue;
    }
    any = true;
    HomElement rhs = c.ev(c.vw(2));
    const HomElement v1 = c.ev(c.vw(1));
    for (unsigned i = 0; i + 2 < k; ++i) rhs = c.L.bracket(rhs, v1);
    c.check("v_k = [v2 v1^{k-2}]", k, c.ev(c.vw(k)), rhs);
  }
  if (!any) c.vacuous("compact_vk", 0, "no applicable k");
}

// ---- sandwich -----------------------------------------------------------

void run_sandwich(Ctx& c) {
  const std::uint64_t q = c.q;
  bool ady2 = true;
  std::string where;
  for (unsigned d = 1; d + 2 <= c.hor; ++d)
    for (std::size_t i = 0; i < c.L.dim(d); ++i) {
      auto e = c.L.act_elem(c.L.act_elem(c.L.unit_element(d, i), Gen::y), Gen::y);
      if (!vec_is_zero(e.coords)) {
        ady2 = false;
        where = "degree " + std::to_string(d) + " basis " + std::to_string(i);
      }
    }
  IdentityResult r1;
  r1.label = "(ad y)^2 = 0 on every basis element";
  r1.site = "all";
  r1.pass = ady2;
  r1.lhs = ady2 ? "0" : "nonzero at " + where;
  r1.rhs = "0";
  c.out.items.push_back(r1);

  bool adxq = true;
  where.clear();
  for (unsigned d = 1; d + q <= c.hor; ++d)
    for (std::size_t i = 0; i < c.L.dim(d); ++i) {
      HomElement e = c.L.unit_element(d, i);
      for (std::uint64_t r = 0; r < q; ++r) e = c.L.act_elem(e, Gen::x);
      if (!vec_is_zero(e.coords)) {
        adxq = false;
        where = "degree " + std::to_string(d) + " basis " + std::to_string(i);
      }
    }
  IdentityResult r2;
  r2.label = "(ad x)^q = 0 on every basis element";
  r2.site = "all";
  r2.pass = adxq;
  r2.lhs = adxq ? "0" : "nonzero at " + where;
  r2.rhs = "0";
  c.out.items.push_back(r2);
}

// ---- chain --------------------------------------------------------------
// y centralizes the components strictly between a diamond and the approach
// to the next one.

void run_chain(Ctx& c) {
  const std::uint64_t q = c.q;
  auto diamonds = c.rep.diamond_degrees();
  bool any = false;
  for (unsigned m : diamonds) {
    if (m < q) continue;  // stated for diamonds from the second on
    if (c.at && *c.at != (m - 1) / (q - 1)) continue;
    any = true;
    bool ok = true;
    std::string where;
    const unsigned lo = m + 1;
    const unsigned hi = std::min<unsigned>(m + unsigned(q) - 3, c.hor - 1);
    for (unsigned d = lo; d <= hi; ++d)
      for (std::size_t i = 0; i < c.L.dim(d); ++i)
        if (!vec_is_zero(c.L.act_elem(c.L.unit_element(d, i), Gen::y).coords)) {
          ok = false;
          where = "degree " + std::to_string(d);
        }
    // when the next diamond is not at m+q-1, y also centralizes m+q-2
    auto next = std::find_if(diamonds.begin(), diamonds.end(),
                             [m](unsigned d) { return d > m; });
    if (next != diamonds.end() && *next != m + q - 1 && m + q - 2 <= c.hor - 1) {
      const unsigned d = m + unsigned(q) - 2;
      for (std::size_t i = 0; i < c.L.dim(d); ++i)
        if (!vec_is_zero(c.L.act_elem(c.L.unit_element(d, i), Gen::y).coords)) {
          ok = false;
          where = "degree " + std::to_string(d);
        }
    }
    IdentityResult r;
    r.label = "y centralizes L_{m+1}..L_{m+q-3}";
    r.site = "m=" + std::to_string(m);
    r.pass = ok;
    r.lhs = ok ? "0" : "nonzero at " + where;
    r.rhs = "0";
    if (hi < m + q - 3) r.note = "range truncated at the horizon";
    c.out.items.push_back(r);
  }
  if (!any) c.vacuous("chain", 0, "no diamond sites");
}

// ---- chain_N ------------------------------------------------------------
// [N_i y] lies in the graded centre of N for m < i <= m+q-3, checked on the
// algebra before the quotient, at diamonds m >= 2q-1 of the quotient.

void run_chain_n(Ctx& c) {
  if (!c.N) {
    c.vacuous("chain_N", 0, "no pre-quotient algebra supplied");
    return;
  }
  const GradedAlgebra& N = *c.N;
  const std::uint64_t q = c.q;
  bool any = false;
  for (const auto& rec : c.rep.records) {
    if (!rec.is_diamond() || rec.degree < 2 * q - 1) continue;
    const unsigned m = rec.degree;
    const unsigned t = rec.t ? *rec.t : 0;
    if (c.at && *c.at != t) continue;
    // hypothesis side conditions for types -1 and 0
    std::string why;
    if (rec.type.tag == TypeVal::Tag::finite) {
      const Fel& mu = rec.type.mu;
      const bool is_m1 = mu == c.f->from_int(-1);
      if (is_m1 || mu.is_zero()) {
        const DiamondRecord* prev = t >= 2 ? c.slot(t - 1) : nullptr;
        if (!prev || !prev->is_diamond() || prev->type.tag == TypeVal::Tag::none)
          why = "previous slot is not a typed diamond";
        else if (mu.is_zero() && prev->type.tag == TypeVal::Tag::finite &&
                 prev->type.mu.is_zero())
          why = "previous slot also has type 0";
      }
    }
    any = true;
    if (!why.empty()) {
      c.vacuous("chain_N", t, why);
      continue;
    }
    const unsigned hi = std::min<unsigned>(m + unsigned(q) - 3, N.computed_to() - 2);
    if (m + 1 > hi) {
      c.vacuous("chain_N", t, "no room below the horizon of N");
      continue;
    }
    bool ok = true;
    std::string where;
    for (unsigned i = m + 1; i <= hi; ++i)
      for (std::size_t b = 0; b < N.dim(i); ++b) {
        HomElement z = N.act_elem(N.unit_element(i, b), Gen::y);
        if (!vec_is_zero(N.act_elem(z, Gen::x).coords) ||
            !vec_is_zero(N.act_elem(z, Gen::y).coords)) {
          ok = false;
          where = "degree " + std::to_string(i);
        }
      }
    IdentityResult r;
    r.label = "[N_i y] in Z(N) for m < i <= m+q-3";
    r.site = "m=" + std::to_string(m);
    r.pass = ok;
    r.lhs = ok ? "central" : "non-central at " + where;
    r.rhs = "central";
    if (hi < m + q - 3) r.note = "range truncated at the horizon";
    c.out.items.push_back(r);
  }
  if (!any) c.vacuous("chain_N", 0, "no diamond sites at degree >= 2q-1");
}

// ---- no_consec ----------------------------------------------------------

void run_no_consec(Ctx& c) {
  bool ok = true;
  std::string where;
  for (unsigned d = 1; d + 1 <= c.hor; ++d)
    if (c.L.dim(d) == 2 && c.L.dim(d + 1) == 2) {
      ok = false;
      where = "degrees " + std::to_string(d) + "," + std::to_string(d + 1);
    }
  IdentityResult r;
  r.label = "no two consecutive components are diamonds";
  r.site = "all";
  r.pass = ok;
  r.lhs = ok ? "none" : where;
  r.rhs = "none";
  c.out.items.push_back(r);
}

}  // namespace

SuiteResult verify_suite(const GradedAlgebra& l, const GradedAlgebra* n, const ThinReport& report,
                         const std::string& suite, std::optional<unsigned> at) {
  if (at && std::uint64_t(*at) * (report.q - 1) > l.computed_to())
    throw std::out_of_range("site k=" + std::to_string(*at) + " exceeds the horizon");
  Ctx c(l, n, report, suite, at);
  if (suite == "lemma_v1")
    run_lemma_v1(c);
  else if (suite == "cor_v1x")
    run_cor_v1x(c);
  else if (suite == "lemma_v2")
    run_lemma_v2(c);
  else if (suite == "lemma_v2ext")
    run_lemma_v2ext(c);
  else if (suite == "remarks_mu0")
    run_remarks_mu0(c);
  else if (suite == "lemma_va1")
    run_lemma_va1(c);
  else if (suite == "compact_vk")
    run_compact_vk(c);
  else if (suite == "sandwich")
    run_sandwich(c);
  else if (suite == "chain")
    run_chain(c);
  else if (suite == "chain_N")
    run_chain_n(c);
  else if (suite == "no_consec")
    run_no_consec(c);
  else
    throw std::invalid_argument("unknown suite: " + suite);
  return std::move(c.out);
}

nlohmann::ordered_json suites_to_json(const std::vector<SuiteResult>& results) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& s : results) {
    nlohmann::ordered_json sj;
    sj["pass"] = s.all_pass();
    sj["checked"] = s.items.size() - s.vacuous_count();
    sj["failures"] = s.failures();
    sj["vacuous"] = nlohmann::ordered_json::array();
    sj["items"] = nlohmann::ordered_json::array();
    for (const auto& i : s.items) {
      if (i.vacuous) {
        sj["vacuous"].push_back({{"label", i.label}, {"site", i.site}, {"why", i.note}});
        continue;
      }
      nlohmann::ordered_json ij{{"label", i.label}, {"site", i.site}, {"pass", i.pass}};
      if (!i.pass) {
        ij["lhs"] = i.lhs;
        ij["rhs"] = i.rhs;
      }
      if (!i.note.empty()) ij["note"] = i.note;
      sj["items"].push_back(ij);
    }
    j[s.suite] = sj;
  }
  return j;
}

}  // namespace thinlie
