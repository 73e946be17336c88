#include "civan/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "civan/linalg.hpp"

namespace civan {

namespace {

Polynomial normal_form_impl(const Polynomial& f, const std::vector<Polynomial>& g,
                            const MonomialOrder& order) {
  Polynomial remainder(f.field(), f.nvars());
  Polynomial p = f;
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading(order);
    bool reduced = false;
    for (const Polynomial& divisor : g) {
      const auto& [dm, dc] = divisor.leading(order);
      if (!divides(dm, lm)) continue;
      p -= divisor.times_term(quotient(lm, dm), lc * inv(dc));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const auto& [fm, fc] = f.leading(order);
  const auto& [gm, gc] = g.leading(order);
  const Monomial l = lcm(fm, gm);
  return f.times_term(quotient(l, fm), inv(fc)) - g.times_term(quotient(l, gm), inv(gc));
}

}  // namespace

bool GroebnerBasis::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (elements.empty()) return false;
  return normal_form_impl(f, elements, order).is_zero();
}

int GroebnerBasis::max_degree() const {
  int d = 0;
  for (const Polynomial& g : elements) d = std::max(d, g.total_degree());
  return d;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const MonomialOrder& order) {
  if (g.empty()) throw std::invalid_argument("normal form against an empty divisor list");
  for (const Polynomial& divisor : g) {
    if (divisor.is_zero()) throw std::invalid_argument("zero divisor in normal form");
    if (divisor.field() != f.field() || divisor.nvars() != f.nvars())
      throw std::invalid_argument("normal form across different rings");
  }
  return normal_form_impl(f, g, order);
}

GroebnerBasis buchberger(const Field& field, int nvars, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order) {
  std::vector<Polynomial> input;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.field() != field || g.nvars() != nvars)
      throw std::invalid_argument("generator from a different ring");
    input.push_back(g.monic(order));
  }
  // Ascending insertion order keeps the interreduction effective and the run
  // deterministic.
  std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(order, a.leading(order).first, b.leading(order).first) ==
           std::strong_ordering::less;
  });

  std::vector<Polynomial> basis;
  auto push_reduced = [&](const Polynomial& f) -> bool {
    Polynomial r = basis.empty() ? f : normal_form_impl(f, basis, order);
    if (r.is_zero()) return false;
    basis.push_back(r.monic(order));
    return true;
  };

  struct Pair {
    Monomial l;
    int i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    auto c = compare(order, a.l, b.l);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  auto add_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i)
      pairs.insert(Pair{lcm(basis[i].leading(order).first, basis[j].leading(order).first), i, j});
  };

  for (const Polynomial& g : input)
    if (push_reduced(g)) add_pairs_for(static_cast<int>(basis.size()) - 1);

  while (!pairs.empty()) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Monomial& mi = basis[p.i].leading(order).first;
    const Monomial& mj = basis[p.j].leading(order).first;
    if (p.l.degree() == mi.degree() + mj.degree()) continue;  // coprime leading terms
    Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
    if (push_reduced(s)) add_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: ascending leading monomials, keep only elements whose leading
  // monomial has no kept divisor.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(order, a.leading(order).first, b.leading(order).first) ==
           std::strong_ordering::less;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    const Monomial& lm = g.leading(order).first;
    bool redundant = false;
    for (const Polynomial& h : minimal) {
      if (divides(h.leading(order).first, lm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  // Tail reduction to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) break;
      Polynomial r = normal_form_impl(minimal[i], others, order);
      if (r != minimal[i]) {
        minimal[i] = r.monic(order);
        changed = true;
      }
    }
  }

  return GroebnerBasis{order, field, nvars, std::move(minimal)};
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  for (const Polynomial& g : gens)
    if (!g.is_zero()) return buchberger(g.field(), g.nvars(), gens, order);
  throw std::invalid_argument("cannot deduce the ring from all-zero generators");
}

bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const MonomialOrder& order) {
  auto first_nonzero = [](const std::vector<Polynomial>& v) -> const Polynomial* {
    for (const Polynomial& g : v)
      if (!g.is_zero()) return &g;
    return nullptr;
  };
  const Polynomial* fa = first_nonzero(a);
  const Polynomial* fb = first_nonzero(b);
  if (fa == nullptr || fb == nullptr) return (fa == nullptr) == (fb == nullptr);
  if (fa->field() != fb->field() || fa->nvars() != fb->nvars())
    throw std::invalid_argument("ideal comparison across different rings");
  GroebnerBasis ga = buchberger(fa->field(), fa->nvars(), a, order);
  GroebnerBasis gb = buchberger(fb->field(), fb->nvars(), b, order);
  return ga.elements == gb.elements;
}

namespace {

int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t result = 1;
  for (int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Removes duplicates and any monomial divisible by another in the list.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : out) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

int64_t count_standard(std::vector<Monomial> gens, int nvars, int d);

// All generators are powers of distinct single variables: count exponent
// vectors of total degree d with those caps by convolution.
int64_t count_capped(const std::vector<Monomial>& gens, int nvars, int d) {
  std::vector<int> caps;  // exponent bound per capped variable (exclusive)
  for (const Monomial& g : gens)
    for (int e : g.exp)
      if (e > 0) caps.push_back(e);
  const int free_vars = nvars - static_cast<int>(caps.size());
  std::vector<int64_t> acc(d + 1);
  for (int k = 0; k <= d; ++k) acc[k] = binomial(free_vars - 1 + k, free_vars - 1);
  if (free_vars == 0) {
    std::fill(acc.begin(), acc.end(), 0);
    acc[0] = 1;
  }
  for (int cap : caps) {
    std::vector<int64_t> next(d + 1, 0);
    for (int k = 0; k <= d; ++k)
      for (int e = 0; e < cap && e <= k; ++e) next[k] += acc[k - e];
    acc = std::move(next);
  }
  return acc[d];
}

int64_t count_standard(std::vector<Monomial> gens, int nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return (gens.empty() && d == 0) ? 1 : 0;
  gens = minimalize(std::move(gens));
  if (!gens.empty() && gens.front().degree() == 0) return 0;
  if (gens.empty()) return binomial(nvars - 1 + d, nvars - 1);

  bool pure_powers = true;
  std::vector<bool> seen(nvars, false);
  for (const Monomial& g : gens) {
    int support = 0, var = -1;
    for (int i = 0; i < nvars; ++i)
      if (g.exp[i] > 0) {
        ++support;
        var = i;
      }
    if (support != 1 || seen[var]) {
      pure_powers = false;
      break;
    }
    seen[var] = true;
  }
  if (pure_powers) return count_capped(gens, nvars, d);

  // Split on a variable of the last (largest-degree) generator:
  // standard monomials with t_j = 0, plus t_j * (standard for the colon).
  int pivot = -1;
  for (int i = 0; i < nvars; ++i)
    if (gens.back().exp[i] > 0) {
      pivot = i;
      break;
    }

  std::vector<Monomial> without;  // generators avoiding the pivot, coordinate dropped
  for (const Monomial& g : gens) {
    if (g.exp[pivot] > 0) continue;
    Monomial m = g;
    m.exp.erase(m.exp.begin() + pivot);
    without.push_back(std::move(m));
  }
  std::vector<Monomial> colon = gens;
  for (Monomial& g : colon)
    if (g.exp[pivot] > 0) --g.exp[pivot];
  return count_standard(std::move(without), nvars - 1, d) +
         count_standard(std::move(colon), nvars, d - 1);
}

}  // namespace

int64_t hilbert_function(const GroebnerBasis& gb, int d) {
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Monomial> lms;
  lms.reserve(gb.elements.size());
  for (const Polynomial& g : gb.elements) lms.push_back(g.leading(gb.order).first);
  return count_standard(std::move(lms), gb.nvars, d);
}

GeneratorCount minimal_generator_count(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order) {
  std::vector<Polynomial> nonzero;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("minimal generator count requires homogeneous input");
    nonzero.push_back(g);
  }
  if (nonzero.empty()) return GeneratorCount{};

  const Field field = nonzero.front().field();
  const int nvars = nonzero.front().nvars();
  GroebnerBasis gb = buchberger(field, nvars, nonzero, order);
  const int max_deg = gb.max_degree();

  GeneratorCount out;
  out.per_degree.assign(max_deg, 0);

  // basis of I_{d-1} carried forward as echelon rows over the degree-(d-1)
  // monomial list.
  std::vector<Monomial> prev_monos;
  std::map<int, std::vector<uint8_t>> prev_rows;

  for (int d = 1; d <= max_deg; ++d) {
    const std::vector<Monomial> monos = monomials_of_degree(nvars, d, order);
    std::map<Monomial, int> col_of;
    for (size_t j = 0; j < monos.size(); ++j) col_of.emplace(monos[j], static_cast<int>(j));

    Echelon ech(field, static_cast<int>(monos.size()));
    // S_1 * I_{d-1}: multiply the carried basis by each variable.
    for (const auto& [pivot, row] : prev_rows) {
      for (int var = 0; var < nvars; ++var) {
        std::vector<uint8_t> shifted(monos.size(), 0);
        for (size_t j = 0; j < prev_monos.size(); ++j) {
          if (row[j] == 0) continue;
          Monomial m = prev_monos[j];
          ++m.exp[var];
          shifted[col_of.at(m)] = row[j];
        }
        ech.insert(std::move(shifted));
      }
    }
    const int dim_shifted = ech.rank();
    for (const Polynomial& g : gb.elements) {
      if (g.total_degree() != d) continue;
      std::vector<uint8_t> row(monos.size(), 0);
      for (const auto& [mono, c] : g.terms()) row[col_of.at(mono)] = static_cast<uint8_t>(c.rep());
      ech.insert(std::move(row));
    }
    out.per_degree[d - 1] = ech.rank() - dim_shifted;
    out.total += out.per_degree[d - 1];

    prev_monos = monos;
    prev_rows = ech.rows();
  }
  return out;
}

}  // namespace civan
