#include <doctest.h>

#include <random>

#include "thinlie/combinatorics.hpp"

using namespace thinlie;

TEST_CASE("binomial residues via Lucas") {
  CHECK(binom_mod_p(6, 3, 7) == 6);    // C(q-1,i) = (-1)^i pattern
  CHECK(binom_mod_p(20, 6, 7) == 1);   // C(hp^t + p^t - 1, p^t - 1) = 1
  CHECK(binom_mod_p(5, 0, 7) == 1);
  CHECK(binom_mod_p(3, 5, 7) == 0);    // m > n
}

TEST_CASE("C(q-1, i) = (-1)^i mod p for prime powers q") {
  for (auto [q, p] : {std::pair<std::uint64_t, std::uint64_t>{7, 7}, {25, 5}, {49, 7}}) {
    for (std::uint64_t i = 0; i < q; ++i) {
      const std::uint64_t expect = (i % 2 == 0) ? 1 : p - 1;
      CHECK(binom_mod_p(q - 1, i, p) == expect);
    }
  }
}

TEST_CASE("Lucas factorization on random samples") {
  std::mt19937_64 rng(7);
  for (auto [q, p] : {std::pair<std::uint64_t, std::uint64_t>{7, 7}, {49, 7}, {25, 5}}) {
    for (int it = 0; it < 300; ++it) {
      const std::uint64_t a = rng() % 50, c = rng() % 50;
      const std::uint64_t b = rng() % q, d = rng() % q;
      CHECK(binom_mod_p(a * q + b, c * q + d, p) ==
            binom_mod_p(a, c, p) * binom_mod_p(b, d, p) % p);
    }
  }
}

TEST_CASE("Lyndon words") {
  auto d1 = lyndon_words(1);
  REQUIRE(d1.size() == 2);
  CHECK(word_to_string(d1[0]) == "x");
  CHECK(word_to_string(d1[1]) == "y");
  auto d2 = lyndon_words(2);
  REQUIRE(d2.size() == 1);
  CHECK(word_to_string(d2[0]) == "xy");
  CHECK(lyndon_words(6).size() == 9);
}

TEST_CASE("Lyndon counts match the Witt formula up to degree 14") {
  CHECK(witt_dim2(1) == 2);
  CHECK(witt_dim2(2) == 1);
  CHECK(witt_dim2(12) == 335);
  for (unsigned d = 1; d <= 14; ++d) {
    auto words = lyndon_words(d);
    CHECK(words.size() == witt_dim2(d));
    for (std::size_t i = 1; i < words.size(); ++i)
      CHECK(word_to_string(words[i - 1]) < word_to_string(words[i]));
  }
}
