#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "civan/field.hpp"

using namespace civan;

TEST_CASE("prime field construction") {
  Field f = make_field(3, 1);
  CHECK(f.p() == 3);
  CHECK(f.m() == 1);
  CHECK(f.q() == 3);
  CHECK(f.modulus().empty());
  auto elems = enumerate_elements(f);
  REQUIRE(elems.size() == 3);
  CHECK(elems[0].rep() == 0);
  CHECK(elems[2].rep() == 2);
}

TEST_CASE("GF(4) gets the unique irreducible quadratic") {
  Field f = make_field(2, 2);
  // Oracle: enumerate all monic quadratics over GF(2) and keep the root-free
  // ones; x^2 + x + 1 is the only candidate.
  int root_free = 0;
  std::vector<int> expected;
  for (int c1 = 0; c1 < 2; ++c1)
    for (int c0 = 0; c0 < 2; ++c0) {
      bool has_root = false;
      for (int x = 0; x < 2; ++x)
        if ((x * x + c1 * x + c0) % 2 == 0) has_root = true;
      if (!has_root) {
        ++root_free;
        expected = {c0, c1, 1};
      }
    }
  REQUIRE(root_free == 1);
  CHECK(f.modulus() == expected);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1
  // Canonical coefficient-vector order: 0, 1, x, x+1.
  auto elems = enumerate_elements(f);
  REQUIRE(elems.size() == 4);
  CHECK(elems[2].coeffs() == std::vector<int>{0, 1});
  CHECK(elems[3].coeffs() == std::vector<int>{1, 1});
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(7, 4), std::invalid_argument);  // 7^4 > 256
}

TEST_CASE("arithmetic basics") {
  Field f7 = make_field(7, 1);
  CHECK(inv(f7.element(3)) == f7.element(5));  // 3*5 = 15 = 1 (mod 7)
  Field f5 = make_field(5, 1);
  CHECK(pow(f5.element(2), 4) == f5.one());
  CHECK(pow(f5.element(0), 0) == f5.one());
  CHECK(pow(f5.element(0), 3) == f5.zero());
  for (int rep = 0; rep < 5; ++rep) CHECK(f5.element(rep) * f5.one() == f5.element(rep));
  CHECK_THROWS_AS(inv(f5.zero()), std::invalid_argument);
  CHECK_THROWS_AS(f5.element(1) + f7.element(1), std::invalid_argument);
  CHECK_THROWS_AS(f5.element(-1), std::invalid_argument);
  CHECK_THROWS_AS(f5.element(5), std::invalid_argument);
}

TEST_CASE("primitive elements and orders") {
  CHECK(primitive_element(make_field(5, 1)).rep() == 2);  // powers 2,4,3,1
  CHECK(primitive_element(make_field(3, 1)).rep() == 2);
  CHECK(primitive_element(make_field(2, 1)).rep() == 1);  // trivial group

  Field f5 = make_field(5, 1);
  CHECK(element_order(f5.element(4)) == 2);  // 4^2 = 16 = 1
  CHECK(element_order(f5.one()) == 1);
  Field f7 = make_field(7, 1);
  CHECK(element_order(f7.element(3)) == 6);
  CHECK_THROWS_AS(element_order(f7.zero()), std::invalid_argument);
}

TEST_CASE("multiplicative group has order q-1") {
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4},
                      {3, 2}, {3, 3}, {5, 2}}) {
    Field f = make_field(p, m);
    if (f.q() > 32) continue;
    for (int rep = 1; rep < f.q(); ++rep) {
      CHECK(pow(f.element(rep), static_cast<unsigned long long>(f.q() - 1)) == f.one());
      CHECK((f.q() - 1) % element_order(f.element(rep)) == 0);
    }
    FieldElement beta = primitive_element(f);
    CHECK(element_order(beta) == f.q() - 1);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240117);
  for (auto [p, m] : {std::pair{5, 1}, {2, 3}, {3, 2}, {13, 1}, {2, 4}, {5, 2}}) {
    Field f = make_field(p, m);
    std::uniform_int_distribution<int> pick(0, f.q() - 1);
    for (int round = 0; round < 200; ++round) {
      FieldElement a = f.element(pick(rng));
      FieldElement b = f.element(pick(rng));
      FieldElement c = f.element(pick(rng));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == f.zero());
      if (!a.is_zero()) CHECK(a * inv(a) == f.one());
    }
  }
}
