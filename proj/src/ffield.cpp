#include "thinlie/ffield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace thinlie {

namespace {

using Poly = std::vector<std::uint64_t>;  // low-to-high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// a mod b over GF(p); b monic after normalization by its leading coefficient.
Poly poly_mod(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  const std::size_t db = b.size() - 1;
  const std::uint64_t li = inv_mod(b.back(), p);
  for (auto& c : b) c = c * li % p;
  while (a.size() > db) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (c != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

// Extended Euclid over GF(p)[t]: returns u with u*a = gcd(a,b) mod b.
// Used with b = field modulus and a nonzero of degree < deg b, where the
// gcd is a nonzero constant.
Poly poly_inv_mod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = b, r1 = a, s0 = {}, s1 = {1};
  trim(r1);
  while (!r1.empty()) {
    // divide r0 by r1: r0 = q*r1 + rem
    Poly rem = r0;
    trim(rem);
    const std::uint64_t li = inv_mod(r1.back(), p);
    Poly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, 0);
    while (rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      const std::uint64_t c = rem.back() * li % p;
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i)
        rem[shift + i] = (rem[shift + i] + p - c * r1[i] % p) % p;
      trim(rem);
      if (rem.empty()) break;
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    r0.swap(r1);
    r1 = rem;
    Poly new_s(std::max(s0.size(), q.size() + s1.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) new_s[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        new_s[i + j] = (new_s[i + j] + p - q[i] * s1[j] % p) % p;
    trim(new_s);
    s0.swap(s1);
    s1 = new_s;
  }
  // r0 = gcd (nonzero constant), s0 its Bezout coefficient for a.
  const std::uint64_t ci = inv_mod(r0.empty() ? 1 : r0[0], p);
  for (auto& c : s0) c = c * ci % p;
  return poly_mod(s0, b, p);
}

}  // namespace

bool Field::is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool Field::is_irreducible(const Poly& poly, std::uint64_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_is_zero(poly_mod(f, g, p))) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

std::vector<std::uint64_t> Field::default_modulus(std::uint64_t p, unsigned k) {
  if (k == 1) return {0, 1};  // t; degenerate, unused for prime fields
  if (k > 4)
    throw std::invalid_argument(
        "default modulus search is limited to k <= 4; pass an explicit modulus");
  // Monic t^k + c_{k-1} t^{k-1} + ... + c_0, smallest under lexicographic
  // comparison of (c_{k-1}, ..., c_1, c_0): constant term varies fastest.
  Poly low(k, 0);
  while (true) {
    Poly g(k + 1, 0);
    g[k] = 1;
    for (unsigned i = 0; i < k; ++i) g[i] = low[i];
    if (is_irreducible(g, p)) return g;
    std::size_t i = 0;
    while (i < k && ++low[i] == p) low[i++] = 0;
    if (i == k) throw std::logic_error("no irreducible polynomial found");
  }
}

Field::Field(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), mod_(std::move(modulus)) {}

FieldPtr Field::make(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("extension degree k must be >= 1");
  return make(p, k, default_modulus(p, k));
}

FieldPtr Field::make(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("p too large: must fit in 31 bits");
  if (k == 0) throw std::invalid_argument("extension degree k must be >= 1");
  for (auto& c : modulus) c %= p;
  if (modulus.size() != k + 1 || modulus[k] != 1)
    throw std::invalid_argument("modulus must be monic of degree k");
  if (k >= 2 && !is_irreducible(modulus, p))
    throw std::invalid_argument("modulus is reducible over GF(p)");
  return FieldPtr(new Field(p, k, std::move(modulus)));
}

std::uint64_t Field::order() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (r > std::uint64_t(-1) / p_) throw std::overflow_error("field order exceeds 64 bits");
    r *= p_;
  }
  return r;
}

bool Field::has_default_modulus() const {
  return k_ <= 4 && mod_ == default_modulus(p_, k_);
}

Fel Field::zero() const { return from_int(0); }
Fel Field::one() const { return from_int(1); }

Fel Field::from_int(std::int64_t n) const {
  const std::int64_t m = std::int64_t(p_);
  FelCoeffs c(k_, 0);
  c[0] = std::uint64_t(((n % m) + m) % m);
  return Fel(self(), std::move(c));
}

Fel Field::element(const std::vector<std::uint64_t>& coeffs) const {
  if (coeffs.size() > k_) throw std::invalid_argument("too many coefficients for this field");
  FelCoeffs c(k_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % p_;
  return Fel(self(), std::move(c));
}

Fel Field::gen() const {
  if (k_ < 2) throw std::invalid_argument("prime field has no polynomial generator");
  return element({0, 1});
}

Fel Field::element_by_index(std::uint64_t i) const {
  FelCoeffs c(k_, 0);
  for (unsigned j = 0; j < k_; ++j) {
    c[j] = i % p_;
    i /= p_;
  }
  if (i != 0) throw std::out_of_range("element index exceeds field order");
  return Fel(self(), std::move(c));
}

Fel Field::parse(const std::string& text) const {
  FelCoeffs c(k_, 0);
  std::vector<bool> seen(k_, false);
  std::size_t i = 0;
  const auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty field element");
  bool first = true;
  while (true) {
    skip_ws();
    bool neg = false;
    if (!first || (i < text.size() && (text[i] == '+' || text[i] == '-'))) {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw std::invalid_argument("expected '+' in field element at position " + std::to_string(i));
      neg = text[i] == '-';
      ++i;
      skip_ws();
    }
    first = false;
    std::uint64_t coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      coeff = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        coeff = coeff * 10 + std::uint64_t(text[i] - '0');
        coeff %= p_ * p_;  // keep bounded while reading
        ++i;
      }
      coeff %= p_;
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    unsigned e = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          throw std::invalid_argument("expected exponent after '^' at position " + std::to_string(i));
        e = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
          e = e * 10 + unsigned(text[i++] - '0');
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("expected coefficient or 't' at position " + std::to_string(i));
    }
    if (e >= k_) throw std::invalid_argument("exponent t^" + std::to_string(e) + " out of range for k=" + std::to_string(k_));
    if (seen[e]) throw std::invalid_argument("duplicate t^" + std::to_string(e) + " term");
    seen[e] = true;
    c[e] = neg ? (p_ - coeff) % p_ : coeff;
    skip_ws();
    if (i == text.size()) break;
  }
  return Fel(self(), std::move(c));
}

bool Fel::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
}

bool Fel::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint64_t v) { return v == 0; });
}

Fel Fel::operator+(const Fel& o) const {
  Fel r = *this;
  r += o;
  return r;
}

Fel& Fel::operator+=(const Fel& o) {
  const std::uint64_t p = f_->p_;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p;
  return *this;
}

Fel Fel::operator-(const Fel& o) const {
  Fel r = *this;
  r -= o;
  return r;
}

Fel& Fel::operator-=(const Fel& o) {
  const std::uint64_t p = f_->p_;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + p - o.c_[i]) % p;
  return *this;
}

Fel Fel::operator-() const {
  Fel r = *this;
  const std::uint64_t p = f_->p_;
  for (auto& v : r.c_) v = (p - v) % p;
  return r;
}

Fel Fel::operator*(const Fel& o) const {
  const std::uint64_t p = f_->p_;
  const unsigned k = f_->k_;
  if (k == 1) {
    FelCoeffs c(1, c_[0] * o.c_[0] % p);
    return Fel(f_, std::move(c));
  }
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j)
      prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
  }
  auto rem = poly_mod(std::move(prod), f_->mod_, p);
  FelCoeffs c(k, 0);
  for (std::size_t i = 0; i < rem.size(); ++i) c[i] = rem[i];
  return Fel(f_, std::move(c));
}

void Fel::addmul(const Fel& a, const Fel& b) {
  if (f_->k_ == 1) {
    c_[0] = (c_[0] + a.c_[0] * b.c_[0]) % f_->p_;
    return;
  }
  *this += a * b;
}

void Fel::submul(const Fel& a, const Fel& b) {
  const std::uint64_t p = f_->p_;
  if (f_->k_ == 1) {
    c_[0] = (c_[0] + p - a.c_[0] * b.c_[0] % p) % p;
    return;
  }
  *this -= a * b;
}

bool Fel::operator==(const Fel& o) const { return c_ == o.c_; }

Fel Fel::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in GF(p^k)");
  const std::uint64_t p = f_->p_;
  if (f_->k_ == 1) {
    FelCoeffs c(1, inv_mod(c_[0], p));
    return Fel(f_, std::move(c));
  }
  Poly a(c_.begin(), c_.end());
  auto r = poly_inv_mod(a, f_->mod_, p);
  FelCoeffs c(f_->k_, 0);
  for (std::size_t i = 0; i < r.size(); ++i) c[i] = r[i];
  return Fel(f_, std::move(c));
}

Fel Fel::pow(std::int64_t e) const {
  Fel base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  Fel r = f_->one();
  std::uint64_t u = std::uint64_t(e);
  while (u) {
    if (u & 1) r = r * base;
    base = base * base;
    u >>= 1;
  }
  return r;
}

std::string Fel::str() const {
  if (f_->k_ == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  for (unsigned i = 0; i < f_->k_; ++i) {
    if (i) os << '+';
    os << c_[i];
    if (i == 1)
      os << "*t";
    else if (i > 1)
      os << "*t^" << i;
  }
  return os.str();
}

}  // namespace thinlie
