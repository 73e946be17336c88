#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "civan/classify.hpp"
#include "test_util.hpp"

using namespace civan;
using testutil::binom;

namespace {

ParamSet triangle_powers(const Field& f) {
  const int e = f.q() - 1;
  return make_param_set(f, 3, {{e, e, 0}, {0, e, e}, {e, 0, e}});
}

std::vector<int> identity_perm(int s) {
  std::vector<int> p(s);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("minimal generator verdicts") {
  Field f = make_field(3, 1);
  SUBCASE("eight-point set: three generators, height three") {
    PointSet x = enumerate_set(realize_form(Form::I_s4, f));
    auto [ci, mu] = is_complete_intersection(vanishing_ideal(x));
    CHECK(ci);
    CHECK(mu == 3);
  }
  SUBCASE("four-point set: two generators") {
    PointSet x = enumerate_set(triangle_powers(f));
    auto [ci, mu] = is_complete_intersection(vanishing_ideal(x));
    CHECK(ci);
    CHECK(mu == 2);
  }
  SUBCASE("one monomial: the zero ideal") {
    PointSet x = enumerate_set(make_param_set(f, 1, {{2}}));
    auto [ci, mu] = is_complete_intersection(vanishing_ideal(x));
    CHECK(ci);
    CHECK(mu == 0);
  }
}

TEST_CASE("classification of the distinguished families") {
  SUBCASE("eight points in P^3 over GF(3)") {
    Field f = make_field(3, 1);
    ClassificationResult res = classify(realize_form(Form::I_s4, f));
    CHECK(res.is_ci);
    CHECK(res.form == Form::I_s4);
    CHECK(res.permutation == identity_perm(4));
    CHECK(res.mu_total == 3);
    CHECK(res.height == 3);
    CHECK(!res.r);
  }
  SUBCASE("four points in P^2") {
    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
      Field f = make_field(p, m);
      ClassificationResult res = classify(triangle_powers(f));
      CHECK(res.is_ci);
      CHECK(res.form == Form::II_s3);
      CHECK(res.mu_total == 2);
    }
  }
  SUBCASE("s = 2 with an order-2 subgroup over GF(5)") {
    Field f = make_field(5, 1);
    ParamSet ps = make_param_set(f, 3, {{4, 0, 0}, {0, 4, 2}});
    ClassificationResult res = classify(ps);
    CHECK(res.is_ci);
    CHECK(res.form == Form::III_s2);
    REQUIRE(res.r);
    CHECK(*res.r == 2);
    CHECK(res.mu_total == 1);
  }
  SUBCASE("single monomial") {
    Field f = make_field(7, 1);
    ClassificationResult res = classify(make_param_set(f, 2, {{3, 1}}));
    CHECK(res.is_ci);
    CHECK(res.form == Form::IV_s1);
    CHECK(res.mu_total == 0);
    CHECK(res.height == 0);
  }
}

TEST_CASE("sets that are not complete intersections") {
  Field f = make_field(3, 1);
  SUBCASE("triangle graph with unit exponents has seven points") {
    ParamSet ps = clutter_to_paramset(make_clutter(3, {{0, 1}, {1, 2}, {0, 2}}), f);
    CHECK(enumerate_set(ps).size() == 7);
    ClassificationResult res = classify(ps);
    CHECK(!res.is_ci);
    CHECK(res.form == Form::NotCI);
    CHECK(res.mu_total != 2);
  }
  SUBCASE("square graph in P^3") {
    ParamSet ps = clutter_to_paramset(make_clutter(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), f);
    ClassificationResult res = classify(ps);
    CHECK(!res.is_ci);
    CHECK(res.mu_total != 3);
  }
  SUBCASE("non-clutter-type input is rejected") {
    ParamSet ps = make_param_set(f, 2, {{1, 1}, {1, 0}});
    CHECK_THROWS_AS(classify(ps), std::invalid_argument);
  }
}

TEST_CASE("form realizations") {
  SUBCASE("triangle powers from the s = 3 form") {
    Field f = make_field(2, 2);
    ParamSet ps = realize_form(Form::II_s3, f);
    REQUIRE(ps.s() == 3);
    for (const ExponentVector& v : ps.monomials)
      for (int e : v) CHECK((e == 0 || e == 3));
  }
  SUBCASE("parity and divisor preconditions") {
    CHECK_THROWS_AS(realize_form(Form::I_s4, make_field(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(realize_form(Form::I_s4, make_field(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(realize_form(Form::III_s2, make_field(5, 1), 3), std::invalid_argument);
    CHECK_THROWS_AS(realize_form(Form::III_s2, make_field(5, 1)), std::invalid_argument);
  }
  SUBCASE("full-order subgroup over GF(5)") {
    ParamSet ps = realize_form(Form::III_s2, make_field(5, 1), 4);
    CHECK(ps.monomials == std::vector<ExponentVector>{{4, 0, 0}, {0, 4, 1}});
  }
}

TEST_CASE("round trips over small fields") {
  for (int q : {2, 3, 4, 5, 7}) {
    Field f = q == 4 ? make_field(2, 2) : make_field(q, 1);
    ClassificationResult two = classify(realize_form(Form::II_s3, f));
    CHECK(two.form == Form::II_s3);
    for (int r = 1; r <= q - 1; ++r) {
      if ((q - 1) % r != 0) continue;
      ClassificationResult three = classify(realize_form(Form::III_s2, f, r));
      CHECK(three.form == Form::III_s2);
      REQUIRE(three.r);
      CHECK(*three.r == r);
    }
    ClassificationResult four = classify(realize_form(Form::IV_s1, f));
    CHECK(four.form == Form::IV_s1);
    if (q % 2 == 1 && q <= 5) {
      ClassificationResult one = classify(realize_form(Form::I_s4, f));
      CHECK(one.form == Form::I_s4);
    }
  }
}

TEST_CASE("five or more monomials never form a complete intersection") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coin(0, 1);
  Field f3 = make_field(3, 1);
  Field f4 = make_field(2, 2);
  int tested = 0;
  while (tested < 12) {
    const Field& f = tested % 2 ? f3 : f4;
    const int s = 5 + tested % 2;
    const int n = 5;
    // Sample an antichain of supports, one exponent level per variable.
    std::vector<ExponentVector> monomials;
    for (int tries = 0; tries < 200 && static_cast<int>(monomials.size()) < s; ++tries) {
      ExponentVector v(n, 0);
      for (int j = 0; j < n; ++j) v[j] = coin(rng) ? 1 + coin(rng) % (f.q() - 1) : 0;
      if (support(v).empty()) continue;
      bool ok = true;
      for (const ExponentVector& other : monomials) {
        auto sa = support(v), sb = support(other);
        if (std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) ||
            std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
          ok = false;
      }
      if (ok) monomials.push_back(v);
    }
    if (static_cast<int>(monomials.size()) < s) continue;
    ParamSet ps = make_param_set(f, n, monomials);
    if (enumerate_set(ps).size() > 100) continue;
    ClassificationResult res = classify(ps);
    CHECK(!res.is_ci);
    CHECK(res.form == Form::NotCI);
    CHECK(res.mu_total != s - 1);
    ++tested;
  }
}

TEST_CASE("the four-variable form is not clutter realizable") {
  for (int q : {3, 5}) {
    Field f = make_field(q, 1);
    CHECK(!clutter_realizability_check(form_generators(Form::I_s4, f), f));
  }
  SUBCASE("preconditions") {
    Field f3 = make_field(3, 1);
    CHECK_THROWS_AS(clutter_realizability_check(form_generators(Form::I_s4, make_field(2, 1)),
                                                make_field(2, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(clutter_realizability_check(form_generators(Form::II_s3, f3), f3),
                    std::invalid_argument);
    std::vector<Polynomial> wrong = {binom(f3, {1, 1, 0, 0}, {0, 0, 1, 1})};
    CHECK_THROWS_AS(clutter_realizability_check(wrong, f3), std::invalid_argument);
  }
}

TEST_CASE("the three pairing equations force equal vectors") {
  // Independent oracle for the realizability argument: enumerate a box of
  // integer 4-tuples; the only solutions of all three equations are the
  // constant ones.
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          const bool eq1 = a + b == c + d;
          const bool eq2 = a + c == b + d;
          const bool eq3 = b + c == a + d;
          if (eq1 && eq2 && eq3) {
            CHECK(a == b);
            CHECK(b == c);
            CHECK(c == d);
          }
        }
}

TEST_CASE("classification verdict always matches the generator count") {
  std::mt19937 rng(57);
  std::uniform_int_distribution<int> s_pick(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  Field f = make_field(3, 1);
  int tested = 0;
  while (tested < 25) {
    const int s = s_pick(rng);
    const int n = 4;
    std::vector<ExponentVector> monomials;
    for (int tries = 0; tries < 100 && static_cast<int>(monomials.size()) < s; ++tries) {
      ExponentVector v(n, 0);
      for (int j = 0; j < n; ++j) v[j] = coin(rng) ? 1 + coin(rng) : 0;
      if (support(v).empty()) continue;
      bool ok = true;
      for (const ExponentVector& other : monomials) {
        if (v == other) ok = false;
        auto sa = support(v), sb = support(other);
        if (std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) ||
            std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
          ok = false;
      }
      if (ok) monomials.push_back(v);
    }
    if (static_cast<int>(monomials.size()) < s) continue;
    ParamSet ps = make_param_set(f, n, monomials);
    VanishingIdeal vi = vanishing_ideal(enumerate_set(ps));
    auto [ci, mu] = is_complete_intersection(vi);
    ClassificationResult res = classify(ps);
    CHECK(res.is_ci == ci);
    CHECK(res.mu_total == mu);
    CHECK(res.is_ci == (mu == ps.s() - 1));
    ++tested;
  }
}
