#include "thinlie/freelie_oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "thinlie/combinatorics.hpp"

namespace thinlie {

std::uint64_t free_dims(unsigned d) {
  if (d < 1 || d > 14) throw std::out_of_range("free_dims supports 1 <= d <= 14");
  return witt_dim2(d);
}

namespace {

// Monomials of degree d are encoded as bit strings: first letter is the most
// significant bit, x = 0 < y = 1, so numeric order is lexicographic order.
std::size_t word_index(const Word& w) {
  std::size_t idx = 0;
  for (Gen g : w) idx = (idx << 1) | std::size_t(g);
  return idx;
}

bool is_lyndon(std::size_t idx, unsigned d) {
  Word w(d);
  for (unsigned i = 0; i < d; ++i) w[d - 1 - i] = Gen((idx >> i) & 1);
  // strictly smaller than all proper rotations
  for (unsigned r = 1; r < d; ++r) {
    for (unsigned i = 0; i < d; ++i) {
      const Gen a = w[i], b = w[(i + r) % d];
      if (a != b) {
        if (a > b) return false;
        break;
      }
      if (i == d - 1) return false;  // periodic word
    }
  }
  return true;
}

// dst += s * (a . b) where "." is concatenation of monomials.
void accum_product(std::vector<Fel>& dst, const Fel& s, const std::vector<Fel>& a,
                   const std::vector<Fel>& b, unsigned db) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Fel c = s * a[i];
    const std::size_t base = i << db;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      dst[base | j].addmul(c, b[j]);
    }
  }
}

}  // namespace

FreeLieContext::FreeLieContext(FieldPtr field, unsigned maxd) : f_(std::move(field)), maxd_(maxd) {
  if (maxd_ < 1 || maxd_ > 13) throw std::out_of_range("FreeLieContext supports maxd <= 13");
  words_.resize(maxd_ + 1);
  brackets_.resize(maxd_ + 1);
  const Fel one = f_->one();
  for (unsigned d = 1; d <= maxd_; ++d) {
    words_[d] = lyndon_words(d);
    brackets_[d].reserve(words_[d].size());
    for (const auto& w : words_[d]) {
      if (d == 1) {
        std::vector<Fel> poly(2, f_->zero());
        poly[word_index(w)] = one;
        brackets_[d].push_back(std::move(poly));
        continue;
      }
      // standard factorization w = u v, v the longest proper Lyndon suffix
      std::size_t split = 0;
      for (std::size_t i = 1; i < w.size(); ++i) {
        Word suffix(w.begin() + i, w.end());
        if (is_lyndon(word_index(suffix), unsigned(suffix.size()))) {
          split = i;
          break;
        }
      }
      Word u(w.begin(), w.begin() + split), v(w.begin() + split, w.end());
      const auto& wu = words_[unsigned(u.size())];
      const auto& wv = words_[unsigned(v.size())];
      const std::size_t iu = std::size_t(std::find(wu.begin(), wu.end(), u) - wu.begin());
      const std::size_t iv = std::size_t(std::find(wv.begin(), wv.end(), v) - wv.begin());
      const auto& pu = brackets_[unsigned(u.size())][iu];
      const auto& pv = brackets_[unsigned(v.size())][iv];
      std::vector<Fel> poly(std::size_t{1} << d, f_->zero());
      accum_product(poly, one, pu, pv, unsigned(v.size()));
      accum_product(poly, -one, pv, pu, unsigned(u.size()));
      brackets_[d].push_back(std::move(poly));
    }
  }
  // action matrices over Lyndon coordinates
  act_.resize(maxd_);
  for (unsigned d = 1; d + 1 <= maxd_; ++d) {
    for (Gen g : {Gen::x, Gen::y}) {
      Mat m(f_, words_[d].size(), words_[d + 1].size());
      std::vector<Fel> mono(2, f_->zero());
      mono[std::size_t(g)] = one;
      for (std::size_t i = 0; i < words_[d].size(); ++i) {
        std::vector<Fel> poly(std::size_t{1} << (d + 1), f_->zero());
        accum_product(poly, one, brackets_[d][i], mono, 1);
        accum_product(poly, -one, mono, brackets_[d][i], d);
        m.set_row(i, reduce(d + 1, poly));
      }
      act_[d][int(g)] = std::move(m);
    }
  }
}

Vec FreeLieContext::reduce(unsigned d, std::vector<Fel>& poly) const {
  const auto& ws = words_[d];
  Vec coords = zero_vec(f_, ws.size());
  std::size_t wi = 0;
  for (std::size_t idx = 0; idx < poly.size(); ++idx) {
    if (poly[idx].is_zero()) continue;
    while (wi < ws.size() && word_index(ws[wi]) < idx) ++wi;
    if (wi == ws.size() || word_index(ws[wi]) != idx)
      throw std::logic_error("polynomial is not in the free Lie span");
    const Fel c = poly[idx];
    coords[wi] = c;
    const auto& bw = brackets_[d][wi];
    for (std::size_t j = idx; j < poly.size(); ++j) poly[j].submul(c, bw[j]);
  }
  return coords;
}

Vec FreeLieContext::expr_coords(const BracketExpr& e) const {
  if (e.is_zero()) throw std::invalid_argument("expr_coords needs a nonzero expression");
  const unsigned d = e.degree();
  if (d > maxd_) throw std::out_of_range("degree exceeds oracle range");
  std::vector<Fel> poly(std::size_t{1} << d, f_->zero());
  for (const auto& t : e.terms()) {
    // left-normed fold of the word into an associative polynomial
    const auto& letters = t.word.letters();
    std::vector<Fel> acc(2, f_->zero());
    acc[std::size_t(letters[0])] = f_->one();
    for (std::size_t i = 1; i < letters.size(); ++i) {
      std::vector<Fel> mono(2, f_->zero());
      mono[std::size_t(letters[i])] = f_->one();
      std::vector<Fel> next(acc.size() * 2, f_->zero());
      accum_product(next, f_->one(), acc, mono, 1);
      accum_product(next, -f_->one(), mono, acc, unsigned(i));
      acc = std::move(next);
    }
    for (std::size_t j = 0; j < acc.size(); ++j) poly[j].addmul(t.coeff, acc[j]);
  }
  return reduce(d, poly);
}

Vec FreeLieContext::bracket_basis(unsigned du, std::size_t iu, unsigned dv, std::size_t iv) const {
  const unsigned d = du + dv;
  if (d > maxd_) throw std::out_of_range("degree exceeds oracle range");
  std::vector<Fel> poly(std::size_t{1} << d, f_->zero());
  accum_product(poly, f_->one(), brackets_[du][iu], brackets_[dv][iv], dv);
  accum_product(poly, -f_->one(), brackets_[dv][iv], brackets_[du][iu], du);
  return reduce(d, poly);
}

std::vector<std::size_t> brute_quotient_dims(const Presentation& p, unsigned maxd) {
  FreeLieContext ctx(p.field, std::min(maxd, 12u));
  return brute_quotient_dims(p, maxd, ctx);
}

std::vector<std::size_t> brute_quotient_dims(const Presentation& p, unsigned maxd,
                                             const FreeLieContext& ctx) {
  if (maxd > 12) throw std::out_of_range("brute_quotient_dims is capped at degree 12");
  if (maxd < 1) throw std::invalid_argument("maxd must be >= 1");
  if (maxd > ctx.maxd()) throw std::out_of_range("context does not reach maxd");
  if (!ctx.field()->same_as(*p.field))
    throw std::invalid_argument("context field differs from the presentation field");
  std::vector<std::size_t> dims(maxd + 1, 0);
  dims[1] = 2;
  std::vector<Vec> ideal_prev;  // RREF basis of I_{d-1} in Lyndon coordinates
  for (unsigned d = 2; d <= maxd; ++d) {
    std::vector<Vec> rows;
    for (const auto& b : ideal_prev)
      for (Gen g : {Gen::x, Gen::y}) rows.push_back(mat_apply(b, ctx.act(d - 1, g)));
    for (const auto& r : p.relators)
      if (!r.is_zero() && r.degree() == d) rows.push_back(ctx.expr_coords(r));
    rref(rows, p.field);
    dims[d] = std::size_t(free_dims(d)) - rows.size();
    ideal_prev = std::move(rows);
  }
  return dims;  // dims[d] for 1 <= d <= maxd; dims[0] unused
}

}  // namespace thinlie
