#include "civan/vanishing.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "civan/errors.hpp"

namespace civan {

namespace {
const MonomialOrder kGRevLex{OrderKind::GRevLex};

int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t result = 1;
  for (int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}
}  // namespace

Matrix evaluation_matrix(const PointSet& x, int d) {
  if (d < 1) throw std::invalid_argument("evaluation degree must be >= 1");
  const Field& f = x.field();
  const std::vector<Monomial> monos = monomials_of_degree(x.s(), d, kGRevLex);
  Matrix m(f, x.size(), static_cast<int>(monos.size()));
  for (int i = 0; i < x.size(); ++i) {
    const ProjectivePoint& p = x.points()[i];
    // Coordinate powers up to d, packed reps. 0^0 = 1.
    std::vector<std::vector<int>> powers(x.s(), std::vector<int>(d + 1, 1));
    for (int v = 0; v < x.s(); ++v)
      for (int e = 1; e <= d; ++e)
        powers[v][e] = f.mul(powers[v][e - 1], p.coords[v].rep());
    for (size_t j = 0; j < monos.size(); ++j) {
      int acc = 1;
      for (int v = 0; v < x.s() && acc != 0; ++v)
        if (monos[j].exp[v] > 0) acc = f.mul(acc, powers[v][monos[j].exp[v]]);
      m.set_rep(i, static_cast<int>(j), acc);
    }
  }
  return m;
}

std::vector<Polynomial> ideal_degree_slice(const PointSet& x, int d) {
  const std::vector<Monomial> monos = monomials_of_degree(x.s(), d, kGRevLex);
  Matrix m = evaluation_matrix(x, d);
  std::vector<Polynomial> out;
  for (const std::vector<FieldElement>& v : kernel_basis(m)) {
    Polynomial p(x.field(), x.s());
    for (size_t j = 0; j < monos.size(); ++j)
      if (!v[j].is_zero()) p.add_term(monos[j], v[j]);
    out.push_back(p.monic(kGRevLex));
  }
  return out;
}

VanishingIdeal vanishing_ideal(const PointSet& x, uint64_t matrix_entry_budget) {
  if (x.size() == 0) throw std::invalid_argument("vanishing ideal of the empty set");
  const Field& f = x.field();
  const int s = x.s();
  const int n_points = x.size();

  // Degree by degree, keep only slice elements independent of S_1 * I_{d-1};
  // the survivors are a minimal generating set of the same ideal, which
  // keeps the Buchberger input small.
  std::vector<Polynomial> generators;
  std::vector<Monomial> prev_monos;
  std::map<int, std::vector<uint8_t>> prev_rows;  // echelon basis of I_{d-1}
  int stabilized_at = -1;
  for (int d = 1; d <= n_points + 1; ++d) {
    const int64_t cols = binomial(s - 1 + d, s - 1);
    if (static_cast<uint64_t>(cols) * n_points > matrix_entry_budget)
      throw budget_error("degree-" + std::to_string(d) + " evaluation matrix needs " +
                         std::to_string(cols * n_points) + " entries, over the budget of " +
                         std::to_string(matrix_entry_budget));
    const std::vector<Monomial> monos = monomials_of_degree(s, d, kGRevLex);
    std::map<Monomial, int> col_of;
    for (size_t j = 0; j < monos.size(); ++j) col_of.emplace(monos[j], static_cast<int>(j));

    Echelon ech(f, static_cast<int>(monos.size()));
    for (const auto& [pivot, row] : prev_rows) {
      for (int var = 0; var < s; ++var) {
        std::vector<uint8_t> shifted(monos.size(), 0);
        for (size_t j = 0; j < prev_monos.size(); ++j) {
          if (row[j] == 0) continue;
          Monomial mono = prev_monos[j];
          ++mono.exp[var];
          shifted[col_of.at(mono)] = row[j];
        }
        ech.insert(std::move(shifted));
      }
    }

    const auto kernel = kernel_basis(evaluation_matrix(x, d));
    for (const std::vector<FieldElement>& v : kernel) {
      std::vector<uint8_t> row(monos.size(), 0);
      for (size_t j = 0; j < monos.size(); ++j) row[j] = static_cast<uint8_t>(v[j].rep());
      if (!ech.insert(std::move(row))) continue;
      Polynomial p(f, s);
      for (size_t j = 0; j < monos.size(); ++j)
        if (!v[j].is_zero()) p.add_term(monos[j], v[j]);
      generators.push_back(p.monic(kGRevLex));
    }
    prev_monos = monos;
    prev_rows = ech.rows();

    const int64_t hf = cols - static_cast<int64_t>(kernel.size());  // = rank
    if (hf == n_points) {
      if (stabilized_at < 0) {
        stabilized_at = d;
      } else {
        break;  // one degree past stabilization bounds the generation degree
      }
    } else if (stabilized_at >= 0) {
      throw std::logic_error("Hilbert function dropped after stabilizing");
    }
  }
  if (stabilized_at < 0)
    throw std::logic_error("Hilbert function failed to stabilize at |X| by degree |X|");

  GroebnerBasis gb = buchberger(f, s, generators, kGRevLex);
  if (hilbert_function(gb, n_points) != n_points ||
      hilbert_function(gb, n_points + 1) != n_points)
    throw std::logic_error("vanishing ideal postcondition failed: Hilbert function of the "
                           "reduced basis does not stabilize at |X|");
  return VanishingIdeal{std::move(generators), std::move(gb), x};
}

bool is_binomial_generated(const VanishingIdeal& vi) {
  for (const Polynomial& g : vi.gb.elements)
    if (g.term_count() > 2) return false;
  return true;
}

bool check_quartic_constraint(const ParamSet& ps, const VanishingIdeal& vi) {
  if (ps.field.q() == 2)
    throw std::invalid_argument("quartic constraint check requires q != 2");
  const int s = ps.s();
  if (s < 4) return true;  // no four distinct indices
  const Field& f = ps.field;

  auto add_vec = [&](int a, int b) {
    ExponentVector out(ps.n);
    for (int i = 0; i < ps.n; ++i) out[i] = ps.monomials[a][i] + ps.monomials[b][i];
    return out;
  };

  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      for (int k = 0; k < s; ++k)
        for (int l = k + 1; l < s; ++l) {
          if (k == i || k == j || l == i || l == j) continue;
          Monomial mij = Monomial::constant(s);
          ++mij.exp[i];
          ++mij.exp[j];
          Monomial mkl = Monomial::constant(s);
          ++mkl.exp[k];
          ++mkl.exp[l];
          Polynomial binom = Polynomial::term(f, mij, f.one());
          binom.add_term(mkl, -f.one());
          if (!vi.gb.contains(binom)) continue;
          if (add_vec(i, j) != add_vec(k, l)) return false;
        }
  return true;
}

}  // namespace civan
