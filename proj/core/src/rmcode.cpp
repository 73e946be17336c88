#include "civan/rmcode.hpp"

#include <stdexcept>

namespace civan {

Matrix generator_matrix(const PointSet& x, int d) {
  // The code is the column space of the evaluation matrix; row-reduce its
  // transpose to get a canonical basis of codewords.
  RrefResult r = rref(evaluation_matrix(x, d).transposed());
  const int k = static_cast<int>(r.pivot_cols.size());
  Matrix g(x.field(), k, x.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < x.size(); ++j) g.set_rep(i, j, r.reduced.rep_at(i, j));
  return g;
}

CodeParameters code_parameters(const PointSet& x, const VanishingIdeal& vi, int d,
                               uint64_t codeword_budget) {
  if (d < 1) throw std::invalid_argument("code degree must be >= 1");
  const Field& f = x.field();
  Matrix gen = generator_matrix(x, d);
  CodeParameters out;
  out.degree = d;
  out.length = x.size();
  out.dimension = gen.rows();

  if (hilbert_function(vi.gb, d) != out.dimension)
    throw std::logic_error("code dimension disagrees with the Hilbert function");

  uint64_t sweep = 1;
  for (int i = 0; i < out.dimension; ++i) {
    if (sweep > codeword_budget / static_cast<uint64_t>(f.q())) {
      sweep = codeword_budget + 1;
      break;
    }
    sweep *= static_cast<uint64_t>(f.q());
  }
  if (sweep > codeword_budget) return out;  // min_distance left uncomputed

  int best = out.length + 1;
  std::vector<int> coeff(out.dimension, 0);
  std::vector<int> word(out.length, 0);
  while (true) {
    int pos = out.dimension - 1;
    while (pos >= 0 && coeff[pos] == f.q() - 1) coeff[pos--] = 0;
    if (pos < 0) break;
    ++coeff[pos];

    std::fill(word.begin(), word.end(), 0);
    for (int i = 0; i < out.dimension; ++i) {
      if (coeff[i] == 0) continue;
      for (int j = 0; j < out.length; ++j)
        word[j] = f.add(word[j], f.mul(coeff[i], gen.rep_at(i, j)));
    }
    int weight = 0;
    for (int j = 0; j < out.length; ++j) weight += word[j] != 0;
    best = std::min(best, weight);
    if (best == 1) break;  // cannot improve
  }
  if (out.dimension > 0) out.min_distance = best;
  return out;
}

}  // namespace civan
