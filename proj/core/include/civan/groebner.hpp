#ifndef CIVAN_GROEBNER_HPP
#define CIVAN_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "civan/polynomial.hpp"

namespace civan {

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by the leading monomial of another, sorted ascending by leading monomial.
/// Unique for a given ideal and order; the empty basis is the zero ideal.
struct GroebnerBasis {
  MonomialOrder order;
  Field field;
  int nvars = 0;
  std::vector<Polynomial> elements;

  bool contains(const Polynomial& f) const;  // normal form == 0
  int max_degree() const;                    // 0 for the empty basis
};

/// Remainder of multivariate division of f by the list G. Divisors are tried
/// in list order, so the result is deterministic; it is canonical when G is a
/// Groebner basis. No term of the result is divisible by any leading
/// monomial of G. Throws if G is empty or rings are mixed.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const MonomialOrder& order);

/// Buchberger's algorithm with normal pair selection (smallest lcm first)
/// and the coprime leading-term skip, followed by minimalization and tail
/// reduction. Zero generators are ignored; the result is the reduced basis.
GroebnerBasis buchberger(const Field& field, int nvars, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

/// Convenience overload deducing the ring from the first nonzero generator.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

/// Ideal equality via uniqueness of the reduced Groebner basis.
bool ideal_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                 const MonomialOrder& order);

/// dim (S/I)_d: the number of degree-d monomials divisible by no leading
/// monomial of the basis. Computed by the standard variable-splitting
/// recursion on the initial ideal, so large d is cheap.
int64_t hilbert_function(const GroebnerBasis& gb, int d);

struct GeneratorCount {
  int total = 0;
  std::vector<int> per_degree;  // per_degree[d-1] = new minimal generators in degree d
};

/// Minimal number of homogeneous generators, degree by degree:
/// mu_d = dim I_d - dim (S_1 * I_{d-1}), computed by rank over the field up
/// to the maximal degree of the reduced basis. Throws on non-homogeneous
/// input.
GeneratorCount minimal_generator_count(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order);

}  // namespace civan

#endif
