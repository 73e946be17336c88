#ifndef CIVAN_VANISHING_HPP
#define CIVAN_VANISHING_HPP

#include <vector>

#include "civan/groebner.hpp"
#include "civan/linalg.hpp"
#include "civan/param.hpp"
#include "civan/projective.hpp"

namespace civan {

/// The graded ideal of all homogeneous polynomials vanishing on a finite
/// point set, held as kernel-slice generators plus its reduced GRevLex
/// basis. Construction verifies the Hilbert function stabilizes at |X|.
struct VanishingIdeal {
  std::vector<Polynomial> generators;
  GroebnerBasis gb;
  PointSet source;
};

/// Rows = points (canonical representatives), columns = the degree-d
/// monomials in descending GRevLex order, entries = monomial values.
Matrix evaluation_matrix(const PointSet& x, int d);

/// Basis of I(X)_d: monic polynomials from the kernel of the evaluation
/// matrix, in deterministic order.
std::vector<Polynomial> ideal_degree_slice(const PointSet& x, int d);

/// Computes I(X) by degree slices. Slices are taken until the Hilbert
/// function (= evaluation rank) stabilizes at |X| plus one further degree,
/// which bounds the generation degree of the ideal of a finite reduced
/// point set; the certificate is re-verified on the reduced basis after
/// Buchberger. Throws std::logic_error if the verification fails and
/// budget_error if a slice would exceed the entry budget.
VanishingIdeal vanishing_ideal(const PointSet& x, uint64_t matrix_entry_budget = 20'000'000);

/// True iff every element of the reduced basis has at most two terms.
bool is_binomial_generated(const VanishingIdeal& vi);

/// For a clutter parameterization over q != 2: checks that every membership
/// t_i t_j - t_k t_l in I(X) (i,j,k,l distinct) forces v_i + v_j = v_k + v_l
/// on the exponent vectors.
bool check_quartic_constraint(const ParamSet& ps, const VanishingIdeal& vi);

}  // namespace civan

#endif
