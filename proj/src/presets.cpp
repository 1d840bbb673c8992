#include "thinlie/presets.hpp"

#include <stdexcept>

namespace thinlie {

unsigned power_exponent(std::uint64_t q, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("p must be prime");
  unsigned e = 0;
  std::uint64_t v = q;
  while (v > 1 && v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1 || e == 0) throw std::invalid_argument("q must be a positive power of p");
  return e;
}

void validate_params(const NottinghamParams& np, bool lambda_nonzero) {
  if (!np.field) throw std::invalid_argument("params need a field");
  if (!Field::is_prime(np.p) || np.p <= 3) throw std::invalid_argument("p must be a prime > 3");
  if (np.field->p() != np.p) throw std::invalid_argument("field characteristic differs from p");
  power_exponent(np.q, np.p);
  if (np.q <= 5) throw std::invalid_argument("q must exceed 5");
  if (np.s < 1) throw std::invalid_argument("s must be >= 1");
  if (lambda_nonzero && np.lambda.is_zero())
    throw std::invalid_argument("lambda must be nonzero for this preset (use the lambda=0 variant)");
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > std::uint64_t(-1) / b) throw std::overflow_error("p^s overflow");
    r *= b;
  }
  return r;
}

Word word_of(const LnWord& w) { return w.letters(); }

// [v_k a b ... ] built from an expanded v_k word plus a tail of letters
LnWord vk_tail(unsigned k, const VContext& ctx, std::initializer_list<Gen> tail) {
  Word w = word_of(vword(k, ctx));
  w.insert(w.end(), tail.begin(), tail.end());
  return LnWord(std::move(w));
}

Term term(const Fel& c, LnWord w) { return {c, std::move(w)}; }

}  // namespace

Presentation nottingham_mixed(const NottinghamParams& np) {
  validate_params(np, /*lambda_nonzero=*/true);
  const FieldPtr& f = np.field;
  const std::uint64_t q = np.q;
  const std::uint64_t ps = pow_u64(np.p, np.s);
  const VContext ctx(q);
  const Fel one = f->one();

  Presentation pres;
  pres.field = f;
  pres.q = q;
  pres.s = np.s;
  pres.lambda = np.lambda;
  pres.label = "nottingham-mixed p=" + std::to_string(np.p) + " q=" + std::to_string(q) +
               " s=" + std::to_string(np.s) + " lambda=" + np.lambda.str();

  auto push1 = [&](LnWord w) { pres.relators.push_back(BracketExpr({term(one, std::move(w))})); };

  // [y x^i y] = 0 for 0 < i < q-2
  for (std::uint64_t i = 1; i <= q - 3; ++i) {
    Word w{Gen::y};
    w.insert(w.end(), std::size_t(i), Gen::x);
    w.push_back(Gen::y);
    push1(LnWord(std::move(w)));
  }
  // [v1 x x] = 0, [v1 y y] = 0, [v1 y x] = -2 [v1 x y]
  push1(vk_tail(1, ctx, {Gen::x, Gen::x}));
  push1(vk_tail(1, ctx, {Gen::y, Gen::y}));
  pres.relators.push_back(BracketExpr({term(one, vk_tail(1, ctx, {Gen::y, Gen::x})),
                                       term(f->from_int(2), vk_tail(1, ctx, {Gen::x, Gen::y}))}));
  // [v1 y x^i y] = 0 for 0 < i < q-2
  for (std::uint64_t i = 1; i <= q - 3; ++i) {
    Word w = word_of(vword(1, ctx));
    w.push_back(Gen::y);
    w.insert(w.end(), std::size_t(i), Gen::x);
    w.push_back(Gen::y);
    push1(LnWord(std::move(w)));
  }
  // [v_k y x] + [v_k x y] = 0 for even k, 2 <= k <= p^s
  for (std::uint64_t k = 2; k <= ps; k += 2)
    pres.relators.push_back(
        BracketExpr({term(one, vk_tail(unsigned(k), ctx, {Gen::y, Gen::x})),
                     term(one, vk_tail(unsigned(k), ctx, {Gen::x, Gen::y}))}));
  // lambda [v_{p^s+1} y x] - (1 - lambda) [v_{p^s+1} x y] = 0
  pres.relators.push_back(
      BracketExpr({term(np.lambda, vk_tail(unsigned(ps + 1), ctx, {Gen::y, Gen::x})),
                   term(np.lambda - one, vk_tail(unsigned(ps + 1), ctx, {Gen::x, Gen::y}))}));
  return pres;
}

Presentation nottingham_mixed_lambda0(std::uint64_t p, std::uint64_t q, std::uint64_t s,
                                      FieldPtr field) {
  if (!field) field = Field::make(p, 1);
  NottinghamParams np{p, q, s, field->zero(), field};
  validate_params(np, /*lambda_nonzero=*/false);
  const std::uint64_t ps = pow_u64(p, s);
  const VContext ctx(q);
  const Fel one = field->one();

  // Same relator list with lambda = 0: the final relator reduces to
  // [v_{p^s+1} x y] = 0.
  NottinghamParams tmp = np;
  tmp.lambda = field->one();  // placeholder to pass construction
  Presentation pres = nottingham_mixed(tmp);
  pres.lambda = field->zero();
  pres.label = "nottingham-mixed-lambda0 p=" + std::to_string(p) + " q=" + std::to_string(q) +
               " s=" + std::to_string(s);
  pres.relators.back() = BracketExpr({term(one, vk_tail(unsigned(ps + 1), ctx, {Gen::x, Gen::y}))});

  // Extra relator [v_{2p^s+2} x x] = 0; the diamond above v_{p^s+1} has type
  // 0 here, so the recursion shifts at step p^s + 2.
  VContext shifted(q, {unsigned(ps + 2)});
  pres.relators.push_back(
      BracketExpr({term(one, vk_tail(unsigned(2 * ps + 2), shifted, {Gen::x, Gen::x}))}));
  return pres;
}

}  // namespace thinlie
