#ifndef CIVAN_PARAM_HPP
#define CIVAN_PARAM_HPP

#include <vector>

#include "civan/field.hpp"

namespace civan {

/// Exponent vector v = (v_1..v_n) of a monomial y^v in y_1..y_n.
using ExponentVector = std::vector<int>;

/// Indices (0-based) of the variables occurring in y^v.
std::vector<int> support(const ExponentVector& v);

/// A monomial parameterization y^{v_1},...,y^{v_s} over a field. The
/// monomials must be pairwise distinct and nonconstant; duplicates are a
/// hard error since silent dedup would change s and the ambient projective
/// space.
struct ParamSet {
  Field field;
  int n = 0;  // ambient variable count
  std::vector<ExponentVector> monomials;

  int s() const { return static_cast<int>(monomials.size()); }
};

ParamSet make_param_set(Field field, int n, std::vector<ExponentVector> monomials);

/// True iff no monomial's support contains another's (supports form a
/// clutter). Vacuously true for s = 1.
bool is_clutter_type(const ParamSet& ps);

/// A clutter: edges are subsets of {0..n-1}, none containing another.
struct Clutter {
  int n = 0;
  std::vector<std::vector<int>> edges;  // each sorted ascending, 0-based
};

Clutter make_clutter(int n, std::vector<std::vector<int>> edges);

/// Characteristic-vector parameterization of a clutter; always clutter type.
ParamSet clutter_to_paramset(const Clutter& c, Field field);

}  // namespace civan

#endif
