#include <doctest.h>

#include <random>

#include "thinlie/ffield.hpp"

using namespace thinlie;

TEST_CASE("prime field construction") {
  auto f = Field::make(7, 1);
  CHECK(f->p() == 7);
  CHECK(f->k() == 1);
  CHECK(f->order() == 7);
  CHECK(f->modulus() == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("GF(25) picks t^2+2 as default modulus") {
  auto f = Field::make(5, 2);
  CHECK(f->modulus() == std::vector<std::uint64_t>{2, 0, 1});
  CHECK(f->order() == 25);
}

TEST_CASE("GF(49) default modulus is t^2+1") {
  auto f = Field::make(7, 2);
  CHECK(f->modulus() == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("non-prime p rejected") {
  CHECK_THROWS_AS(Field::make(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(7, 0), std::invalid_argument);
}

TEST_CASE("reducible modulus rejected") {
  CHECK_THROWS_AS(Field::make(5, 2, {1, 0, 1}), std::invalid_argument);  // t^2+1=(t+2)(t+3)
  CHECK_THROWS_AS(Field::make(5, 2, {0, 0, 1}), std::invalid_argument);  // t^2
  CHECK_THROWS_AS(Field::make(5, 2, {2, 0, 2}), std::invalid_argument);  // not monic
}

TEST_CASE("inverse examples in GF(7)") {
  auto f = Field::make(7);
  CHECK(f->from_int(3).inv() == f->from_int(5));
  CHECK(f->one().inv() == f->one());
  CHECK_THROWS_AS(f->zero().inv(), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(12345);
  for (auto spec : {std::pair<std::uint64_t, unsigned>{7, 1}, {5, 2}, {7, 3}, {11, 2}}) {
    auto f = Field::make(spec.first, spec.second);
    const std::uint64_t n = f->order();
    for (int it = 0; it < 200; ++it) {
      Fel a = f->element_by_index(rng() % n);
      Fel b = f->element_by_index(rng() % n);
      Fel c = f->element_by_index(rng() % n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) CHECK(a * a.inv() == f->one());
    }
  }
}

TEST_CASE("Frobenius: (a+b)^p = a^p + b^p") {
  std::mt19937_64 rng(99);
  auto f = Field::make(5, 2);
  for (int it = 0; it < 100; ++it) {
    Fel a = f->element_by_index(rng() % 25);
    Fel b = f->element_by_index(rng() % 25);
    CHECK((a + b).pow(5) == a.pow(5) + b.pow(5));
  }
}

TEST_CASE("element text round-trip") {
  auto f = Field::make(7, 2);
  for (std::uint64_t i = 0; i < f->order(); ++i) {
    Fel a = f->element_by_index(i);
    CHECK(f->parse(a.str()) == a);
  }
  CHECK(f->parse("t") == f->gen());
  CHECK(f->parse("3+2*t") == f->element({3, 2}));
  auto g = Field::make(7);
  CHECK(g->parse("12") == g->from_int(5));
  CHECK(g->from_int(5).str() == "5");
}
