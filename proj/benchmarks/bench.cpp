#include <benchmark/benchmark.h>

#include "civan/classify.hpp"
#include "civan/rmcode.hpp"

using namespace civan;

namespace {

const MonomialOrder grevlex{OrderKind::GRevLex};

Polynomial binom(const Field& f, const std::vector<int>& a, const std::vector<int>& b) {
  Polynomial p = Polynomial::term(f, Monomial{a}, f.one());
  p.add_term(Monomial{b}, -f.one());
  return p;
}

void BM_FieldMul(benchmark::State& state) {
  Field f = make_field(3, 4);  // GF(81)
  int acc = 1;
  for (auto _ : state) {
    for (int a = 1; a < f.q(); ++a) acc = f.mul(acc, a);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul);

void BM_BuchbergerFourCycle(benchmark::State& state) {
  Field f = make_field(3, 1);
  std::vector<Polynomial> gens = {binom(f, {1, 1, 0, 0}, {0, 0, 1, 1}),
                                  binom(f, {1, 0, 1, 0}, {0, 1, 0, 1}),
                                  binom(f, {0, 1, 1, 0}, {1, 0, 0, 1})};
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(f, 4, gens, grevlex);
    benchmark::DoNotOptimize(gb.elements.size());
  }
}
BENCHMARK(BM_BuchbergerFourCycle);

void BM_EnumerateEightPoints(benchmark::State& state) {
  Field f = make_field(3, 1);
  ParamSet ps = realize_form(Form::I_s4, f);  // 3^8 tuples
  for (auto _ : state) {
    PointSet x = enumerate_set(ps);
    benchmark::DoNotOptimize(x.size());
  }
}
BENCHMARK(BM_EnumerateEightPoints);

void BM_VanishingIdealEightPoints(benchmark::State& state) {
  Field f = make_field(3, 1);
  PointSet x = enumerate_set(realize_form(Form::I_s4, f));
  for (auto _ : state) {
    VanishingIdeal vi = vanishing_ideal(x);
    benchmark::DoNotOptimize(vi.gb.elements.size());
  }
}
BENCHMARK(BM_VanishingIdealEightPoints);

void BM_ClassifyTorusSubgroup(benchmark::State& state) {
  Field f = make_field(7, 1);
  ParamSet ps = realize_form(Form::III_s2, f, 3);
  for (auto _ : state) {
    ClassificationResult res = classify(ps);
    benchmark::DoNotOptimize(res.form);
  }
}
BENCHMARK(BM_ClassifyTorusSubgroup);

void BM_MinDistanceSweep(benchmark::State& state) {
  Field f = make_field(5, 1);
  PointSet t = projective_torus(3, f);  // 16 points
  VanishingIdeal vi = vanishing_ideal(t);
  for (auto _ : state) {
    CodeParameters cp = code_parameters(t, vi, 2);
    benchmark::DoNotOptimize(cp.min_distance);
  }
}
BENCHMARK(BM_MinDistanceSweep);

}  // namespace

BENCHMARK_MAIN();
