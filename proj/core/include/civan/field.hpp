#ifndef CIVAN_FIELD_HPP
#define CIVAN_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace civan {

class FieldElement;

namespace detail {
struct FieldData;
}

/// Arithmetic in GF(q), q = p^m with p prime, 1 <= m <= 4 and q <= 256.
///
/// Extension fields are coefficient vectors modulo a fixed irreducible
/// polynomial; the modulus is the first monic degree-m polynomial, in the
/// canonical enumeration of coefficient vectors, that is irreducible over
/// GF(p). Elements are packed as rep = c_0 + c_1*p + ... + c_{m-1}*p^{m-1},
/// so rep order is the canonical element order (0 first). All tables are
/// built at construction; a Field is an immutable shared handle.
class Field {
 public:
  Field() = default;

  int p() const;
  int m() const;
  int q() const;
  // Monic modulus, coefficients c_0..c_m (constant term first). Empty for m=1.
  const std::vector<int>& modulus() const;

  FieldElement element(int rep) const;
  FieldElement from_coeffs(const std::vector<int>& coeffs) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Arithmetic on packed representations; used by hot loops (matrices,
  // enumeration). FieldElement operators delegate here.
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const;
  int inv(int a) const;  // throws std::invalid_argument on 0
  int pow(int a, unsigned long long e) const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }
  explicit operator bool() const { return data_ != nullptr; }

 private:
  friend Field make_field(int p, int m);
  friend class FieldElement;
  explicit Field(std::shared_ptr<const detail::FieldData> data);
  std::shared_ptr<const detail::FieldData> data_;
};

/// One element of a Field. Canonical: each element has exactly one packed
/// representation, and equality is representation equality (within equal
/// fields). Operations on elements of different fields throw.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const { return field_; }
  int rep() const { return rep_; }
  std::vector<int> coeffs() const;  // length m, c_0 first
  bool is_zero() const { return rep_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

 private:
  friend class Field;
  FieldElement(Field field, int rep) : field_(std::move(field)), rep_(rep) {}
  Field field_;
  int rep_ = 0;
};

/// Builds GF(p^m). Throws std::invalid_argument unless p is prime,
/// 1 <= m <= 4 and p^m <= 256.
Field make_field(int p, int m);

FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, unsigned long long e);  // a^0 = 1

/// Least element, in canonical rep order, generating the cyclic group K*.
/// For q = 2 the group is trivial and the result is 1.
FieldElement primitive_element(const Field& field);

/// Multiplicative order of a nonzero element; divides q-1.
int element_order(const FieldElement& a);

/// All q elements, 0 first, then ascending rep (= coefficient-vector) order.
std::vector<FieldElement> enumerate_elements(const Field& field);

}  // namespace civan

#endif
