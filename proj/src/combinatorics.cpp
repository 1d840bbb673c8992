#include "thinlie/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace thinlie {

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Gen g : w) s.push_back(gen_char(g));
  return s;
}

std::string word_to_pretty(const Word& w) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << ' ';
    first = false;
    os << gen_char(w[i]);
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

namespace {

// C(n, m) mod p for n, m < p, via the factorial formula with modular inverse.
std::uint64_t binom_small(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  if (m > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    num = num * ((n + 1 - i) % p) % p;
    den = den * (i % p) % p;
  }
  // den is nonzero mod p because m < p
  std::uint64_t dinv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) dinv = dinv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return num * dinv % p;
}

}  // namespace

std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("p must be prime");
  std::uint64_t r = 1;
  while (m > 0 || n > 0) {
    const std::uint64_t nd = n % p, md = m % p;
    if (md > nd) return 0;
    r = r * binom_small(nd, md, p) % p;
    n /= p;
    m /= p;
  }
  return r;
}

std::vector<Word> lyndon_words(unsigned degree) {
  if (degree == 0) throw std::invalid_argument("degree must be >= 1");
  // Duval: generates all Lyndon words of length <= degree in lex order;
  // we keep those of exact length.
  std::vector<Word> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m == degree) {
      Word v(m);
      for (std::size_t i = 0; i < m; ++i) v[i] = w[i] ? Gen::y : Gen::x;
      out.push_back(std::move(v));
    }
    while (w.size() < degree) w.push_back(w[w.size() % m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
  }
  return out;
}

std::uint64_t witt_dim2(unsigned d) {
  if (d < 1 || d > 62) throw std::out_of_range("witt_dim2 supports 1 <= d <= 62");
  auto mobius = [](unsigned n) -> std::int64_t {
    std::int64_t mu = 1;
    for (unsigned q = 2; q * q <= n; ++q) {
      if (n % q == 0) {
        n /= q;
        if (n % q == 0) return 0;
        mu = -mu;
      }
    }
    if (n > 1) mu = -mu;
    return mu;
  };
  std::int64_t total = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    total += mobius(e) * (std::int64_t{1} << (d / e));
  }
  return std::uint64_t(total / d);
}

}  // namespace thinlie
