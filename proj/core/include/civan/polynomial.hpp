#ifndef CIVAN_POLYNOMIAL_HPP
#define CIVAN_POLYNOMIAL_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "civan/field.hpp"

namespace civan {

/// Exponent vector of a power product t^a in the variables t_1..t_s.
struct Monomial {
  std::vector<int> exp;

  int degree() const;
  bool is_constant() const { return degree() == 0; }
  static Monomial constant(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }

  // Structural comparison only (map key order); not a monomial order.
  bool operator<(const Monomial& other) const { return exp < other.exp; }
  bool operator==(const Monomial& other) const { return exp == other.exp; }
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);  // a / b, requires b | a

enum class OrderKind { GRevLex, Lex };

/// Monomial order with the fixed variable convention t_1 > t_2 > ... > t_s.
/// GRevLex: higher total degree first; ties broken by the rightmost nonzero
/// entry of a - b, negative meaning a > b. Lex: leftmost nonzero of a - b,
/// positive meaning a > b.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;

  bool operator==(const MonomialOrder&) const = default;
};

/// Total comparison under the order; throws on exponent length mismatch.
std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

/// Sparse polynomial in t_1..t_s over a Field. No zero coefficients are
/// stored. Term storage is order-agnostic; leading terms are computed
/// against an explicit MonomialOrder.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Polynomial zero(const Field& field, int nvars) { return Polynomial(field, nvars); }
  static Polynomial term(const Field& field, const Monomial& mono, const FieldElement& coeff);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_homogeneous() const;
  int total_degree() const;  // -1 for the zero polynomial

  void add_term(const Monomial& mono, const FieldElement& coeff);

  FieldElement coeff(const Monomial& mono) const;  // zero if absent
  std::pair<Monomial, FieldElement> leading(const MonomialOrder& order) const;  // throws on zero

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Monomial& mono, const FieldElement& coeff) const;
  Polynomial monic(const MonomialOrder& order) const;

  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  Field field_;
  int nvars_ = 0;
  std::map<Monomial, FieldElement> terms_;
};

/// Terms of f sorted descending under the order (serialization order).
std::vector<std::pair<Monomial, FieldElement>> sorted_terms(const Polynomial& f,
                                                            const MonomialOrder& order);

/// Renders "t1*t2 - t3*t4" style text, terms descending under the order.
/// Prime-field coefficients use the symmetric representative for signs;
/// extension-field coefficients print as parenthesized polynomials in `a`.
std::string to_text(const Polynomial& f, const MonomialOrder& order);

/// All degree-d monomials in nvars variables, descending under the order.
std::vector<Monomial> monomials_of_degree(int nvars, int d, const MonomialOrder& order);

}  // namespace civan

#endif
