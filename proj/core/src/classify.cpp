#include "civan/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace civan {

namespace {

const MonomialOrder kGRevLex{OrderKind::GRevLex};

Polynomial binomial_poly(const Field& f, const std::vector<int>& a,
                         const std::vector<int>& b) {
  Polynomial p = Polynomial::term(f, Monomial{a}, f.one());
  p.add_term(Monomial{b}, -f.one());
  return p;
}

Polynomial permute_variables(const Polynomial& p, const std::vector<int>& perm) {
  Polynomial out(p.field(), p.nvars());
  for (const auto& [mono, c] : p.terms()) {
    Monomial m = Monomial::constant(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) m.exp[perm[i]] = mono.exp[i];
    out.add_term(m, c);
  }
  return out;
}

std::vector<int> divisors_ascending(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Rank over the rationals of a small integer matrix (fraction-free
// elimination; entries stay tiny at this size).
int rational_rank(std::vector<std::vector<long long>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      const long long a = m[rank][col], b = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] = m[i][j] * a - m[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

bool matches(const GroebnerBasis& gb, const std::vector<Polynomial>& candidate_gens) {
  GroebnerBasis cand = buchberger(gb.field, gb.nvars, candidate_gens, gb.order);
  return cand.elements == gb.elements;
}

}  // namespace

std::vector<Polynomial> form_generators(Form form, const Field& field, int r) {
  switch (form) {
    case Form::I_s4:
      return {binomial_poly(field, {1, 1, 0, 0}, {0, 0, 1, 1}),
              binomial_poly(field, {1, 0, 1, 0}, {0, 1, 0, 1}),
              binomial_poly(field, {0, 1, 1, 0}, {1, 0, 0, 1})};
    case Form::II_s3:
      return {binomial_poly(field, {1, 1, 0}, {0, 1, 1}),
              binomial_poly(field, {1, 0, 1}, {0, 1, 1})};
    case Form::III_s2:
      if (r < 1) throw std::invalid_argument("Form III needs r >= 1");
      return {binomial_poly(field, {r + 1, 1}, {1, r + 1})};
    case Form::IV_s1:
      return {};
    case Form::NotCI:
      break;
  }
  throw std::invalid_argument("no generators for NotCI");
}

std::pair<bool, int> is_complete_intersection(const VanishingIdeal& vi) {
  GeneratorCount mu = minimal_generator_count(vi.gb.elements, vi.gb.order);
  return {mu.total == vi.source.s() - 1, mu.total};
}

ClassificationResult classify(const ParamSet& ps, uint64_t point_budget) {
  if (!is_clutter_type(ps))
    throw std::invalid_argument("classification requires a clutter-type parameterization");
  PointSet x = enumerate_set(ps, point_budget);
  return classify(ps, vanishing_ideal(x));
}

ClassificationResult classify(const ParamSet& ps, const VanishingIdeal& vi) {
  if (!is_clutter_type(ps))
    throw std::invalid_argument("classification requires a clutter-type parameterization");
  const int s = ps.s();
  const Field& f = ps.field;

  auto [ci_by_mu, mu_total] = is_complete_intersection(vi);

  ClassificationResult result;
  result.mu_total = mu_total;
  result.height = s - 1;
  result.permutation.resize(s);
  std::iota(result.permutation.begin(), result.permutation.end(), 0);
  result.form = Form::NotCI;

  if (s == 1) {
    if (vi.gb.elements.empty()) result.form = Form::IV_s1;
  } else if (s == 2) {
    for (int r : divisors_ascending(f.q() - 1)) {
      if (matches(vi.gb, form_generators(Form::III_s2, f, r))) {
        result.form = Form::III_s2;
        result.r = r;
        break;
      }
    }
  } else if (s == 3 || (s == 4 && f.q() % 2 == 1)) {
    const Form form = s == 3 ? Form::II_s3 : Form::I_s4;
    const std::vector<Polynomial> gens = form_generators(form, f);
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Polynomial> permuted;
      permuted.reserve(gens.size());
      for (const Polynomial& g : gens) permuted.push_back(permute_variables(g, perm));
      if (matches(vi.gb, permuted)) {
        result.form = form;
        result.permutation = perm;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // s >= 5 keeps NotCI with no form search: a complete intersection cannot
  // have five or more parameterizing monomials of clutter type.

  result.is_ci = result.form != Form::NotCI;
  if (result.is_ci != ci_by_mu)
    throw std::logic_error("classification defect: form matching and minimal generator "
                           "count disagree");
  return result;
}

ParamSet realize_form(Form form, const Field& field, std::optional<int> r) {
  const int q = field.q();
  switch (form) {
    case Form::I_s4: {
      if (q % 2 == 0) throw std::invalid_argument("Form I requires q odd");
      const int e = q - 1;
      const int h = e / 2;
      return make_param_set(field, 8,
                            {{e, h, h, e, e, e, e, 0},
                             {h, h, e, e, e, e, 0, e},
                             {h, e, h, e, e, 0, e, e},
                             {e, e, e, e, 0, e, e, e}});
    }
    case Form::II_s3: {
      const int e = q - 1;
      return make_param_set(field, 3, {{e, e, 0}, {0, e, e}, {e, 0, e}});
    }
    case Form::III_s2: {
      if (!r || *r < 1 || (q - 1) % *r != 0)
        throw std::invalid_argument("Form III requires a divisor r of q-1");
      const int k = (q - 1) / *r;  // least k with o(beta^k) = r
      return make_param_set(field, 3, {{q - 1, 0, 0}, {0, q - 1, k}});
    }
    case Form::IV_s1:
      return make_param_set(field, 1, {{q - 1}});
    case Form::NotCI:
      break;
  }
  throw std::invalid_argument("NotCI has no realization");
}

bool clutter_realizability_check(const std::vector<Polynomial>& gens, const Field& field) {
  if (field.q() == 2) throw std::invalid_argument("realizability check requires q != 2");
  for (const Polynomial& g : gens)
    if (!g.is_zero() && g.nvars() != 4)
      throw std::invalid_argument("realizability check supports only the s = 4 form");
  if (!ideal_equal(gens, form_generators(Form::I_s4, field), kGRevLex))
    throw std::invalid_argument("realizability check supports only the Form I ideal");

  GroebnerBasis gb = buchberger(field, 4, gens, kGRevLex);
  // Quartic membership t_i t_j - t_k t_l forces the characteristic-vector
  // equation v_i + v_j = v_k + v_l; collect one row per actual membership.
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {1, 2, 0, 3}};
  std::vector<std::vector<long long>> equations;
  for (const auto& pr : pairings) {
    std::vector<int> a(4, 0), b(4, 0);
    a[pr[0]] = a[pr[1]] = 1;
    b[pr[2]] = b[pr[3]] = 1;
    if (gb.contains(binomial_poly(field, a, b))) {
      std::vector<long long> row(4, 0);
      row[pr[0]] = row[pr[1]] = 1;
      row[pr[2]] = row[pr[3]] = -1;
      equations.push_back(std::move(row));
    }
  }
  // Every equation annihilates (1,1,1,1), so rank 3 pins the solution space
  // to constant vectors: all edges equal, contradicting a clutter.
  return rational_rank(equations) != 3;
}

}  // namespace civan
