#ifndef CIVAN_RMCODE_HPP
#define CIVAN_RMCODE_HPP

#include <optional>

#include "civan/vanishing.hpp"

namespace civan {

/// Basic parameters of the degree-d evaluation code on X: [n, k, d_min] with
/// n = |X|, k = rank of the evaluation map, d_min the least Hamming weight
/// of a nonzero codeword. d_min is absent when the codeword sweep would
/// exceed its budget.
struct CodeParameters {
  int degree = 0;
  int length = 0;
  int dimension = 0;
  std::optional<int> min_distance;
};

/// Rows = a row-reduced basis of the code (deterministic), columns indexed
/// by the points of X in canonical order.
Matrix generator_matrix(const PointSet& x, int d);

/// Exhaustive parameters: the minimum distance comes from sweeping all q^k
/// nonzero codewords of the row space. When q^k exceeds the budget the
/// sweep is skipped and min_distance is left empty. The dimension is
/// cross-checked against the Hilbert function of the vanishing ideal.
CodeParameters code_parameters(const PointSet& x, const VanishingIdeal& vi, int d,
                               uint64_t codeword_budget = 1'000'000);

}  // namespace civan

#endif
