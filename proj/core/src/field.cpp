#include "civan/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace civan {

namespace detail {

struct FieldData {
  int p = 0;
  int m = 0;
  int q = 0;
  std::vector<int> modulus;  // c_0..c_m, monic; empty for m == 1
  std::vector<uint8_t> add_t;
  std::vector<uint8_t> mul_t;
  std::vector<uint8_t> neg_t;
  std::vector<uint8_t> inv_t;
};

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> unpack(int rep, int p, int m) {
  std::vector<int> c(m);
  for (int i = 0; i < m; ++i) {
    c[i] = rep % p;
    rep /= p;
  }
  return c;
}

int pack(const std::vector<int>& c, int p) {
  int rep = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) rep = rep * p + c[i];
  return rep;
}

// Product of two coefficient vectors reduced modulo the monic modulus.
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = static_cast<int>(prod.size()) - 1; d >= m; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < m; ++i) {
      prod[d - m + i] = ((prod[d - m + i] - c * mod[i]) % p + p * p) % p;
    }
  }
  prod.resize(m);
  return prod;
}

int eval_poly(const std::vector<int>& coeffs, int x, int p) {
  int v = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) v = (v * x + coeffs[i]) % p;
  return v;
}

bool has_root(const std::vector<int>& coeffs, int p) {
  for (int x = 0; x < p; ++x)
    if (eval_poly(coeffs, x, p) == 0) return true;
  return false;
}

// Plain long division check: does the monic divisor divide the monic poly?
bool divides_exactly(const std::vector<int>& divisor, std::vector<int> poly, int p) {
  const int dd = static_cast<int>(divisor.size()) - 1;
  for (int d = static_cast<int>(poly.size()) - 1; d >= dd; --d) {
    int c = poly[d];
    if (c == 0) continue;
    for (int i = 0; i <= dd; ++i)
      poly[d - dd + i] = ((poly[d - dd + i] - c * divisor[i]) % p + p) % p;
  }
  return std::all_of(poly.begin(), poly.end(), [](int c) { return c == 0; });
}

bool is_irreducible(const std::vector<int>& coeffs, int p, int m) {
  if (has_root(coeffs, p)) return false;
  if (m <= 3) return true;  // no linear factor suffices for degree 2 and 3
  // Degree 4 without roots can still split into two irreducible quadratics.
  for (int k = 0; k < p * p; ++k) {
    std::vector<int> quad = unpack(k, p, 2);
    quad.push_back(1);
    if (has_root(quad, p)) continue;
    if (divides_exactly(quad, coeffs, p)) return false;
  }
  return true;
}

// First monic irreducible of degree m in canonical coefficient order.
std::vector<int> find_modulus(int p, int m) {
  const int count = [&] {
    int c = 1;
    for (int i = 0; i < m; ++i) c *= p;
    return c;
  }();
  for (int k = 0; k < count; ++k) {
    std::vector<int> coeffs = unpack(k, p, m);
    coeffs.push_back(1);
    if (is_irreducible(coeffs, p, m)) return coeffs;
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

}  // namespace
}  // namespace detail

Field::Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

int Field::p() const { return data_->p; }
int Field::m() const { return data_->m; }
int Field::q() const { return data_->q; }
const std::vector<int>& Field::modulus() const { return data_->modulus; }

FieldElement Field::element(int rep) const {
  if (rep < 0 || rep >= data_->q) throw std::invalid_argument("element rep out of range");
  return FieldElement(*this, rep);
}

FieldElement Field::from_coeffs(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != data_->m)
    throw std::invalid_argument("coefficient vector length must be m");
  int rep = 0;
  for (int i = data_->m - 1; i >= 0; --i) {
    int c = coeffs[i] % data_->p;
    if (c < 0) c += data_->p;
    rep = rep * data_->p + c;
  }
  return FieldElement(*this, rep);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

int Field::add(int a, int b) const { return data_->add_t[a * data_->q + b]; }
int Field::sub(int a, int b) const { return add(a, neg(b)); }
int Field::mul(int a, int b) const { return data_->mul_t[a * data_->q + b]; }
int Field::neg(int a) const { return data_->neg_t[a]; }

int Field::inv(int a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return data_->inv_t[a];
}

int Field::pow(int a, unsigned long long e) const {
  int result = 1;
  int base = a;
  while (e > 0) {
    if (e & 1ull) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Field::operator==(const Field& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->p == other.data_->p && data_->m == other.data_->m &&
         data_->modulus == other.data_->modulus;
}

std::vector<int> FieldElement::coeffs() const {
  return detail::unpack(rep_, field_.p(), field_.m());
}

namespace {
const Field& check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("operands belong to different fields");
  return a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = check_same_field(a, b);
  return f.element(f.add(a.rep(), b.rep()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = check_same_field(a, b);
  return f.element(f.sub(a.rep(), b.rep()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = check_same_field(a, b);
  return f.element(f.mul(a.rep(), b.rep()));
}

FieldElement FieldElement::operator-() const { return field_.element(field_.neg(rep_)); }

bool FieldElement::operator==(const FieldElement& other) const {
  if (!field_ || !other.field_) return !field_ && !other.field_ && rep_ == other.rep_;
  return field_ == other.field_ && rep_ == other.rep_;
}

FieldElement inv(const FieldElement& a) {
  return a.field().element(a.field().inv(a.rep()));
}

FieldElement pow(const FieldElement& a, unsigned long long e) {
  return a.field().element(a.field().pow(a.rep(), e));
}

Field make_field(int p, int m) {
  if (!detail::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (m < 1 || m > 4) throw std::invalid_argument("extension degree m must be in [1,4]");
  long long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q > 256) throw std::invalid_argument("field size p^m must be <= 256");

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->m = m;
  data->q = static_cast<int>(q);
  if (m > 1) data->modulus = detail::find_modulus(p, m);

  const int n = data->q;
  data->add_t.resize(n * n);
  data->mul_t.resize(n * n);
  data->neg_t.resize(n);
  data->inv_t.resize(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> ca = detail::unpack(a, p, m);
    std::vector<int> na(m);
    for (int i = 0; i < m; ++i) na[i] = (p - ca[i]) % p;
    data->neg_t[a] = static_cast<uint8_t>(detail::pack(na, p));
    for (int b = 0; b < n; ++b) {
      std::vector<int> cb = detail::unpack(b, p, m);
      std::vector<int> s(m);
      for (int i = 0; i < m; ++i) s[i] = (ca[i] + cb[i]) % p;
      data->add_t[a * n + b] = static_cast<uint8_t>(detail::pack(s, p));
      int prod;
      if (m == 1) {
        prod = (a * b) % p;
      } else {
        prod = detail::pack(detail::polymul_mod(ca, cb, data->modulus, p), p);
      }
      data->mul_t[a * n + b] = static_cast<uint8_t>(prod);
      if (prod == 1) data->inv_t[a] = static_cast<uint8_t>(b);
    }
  }
  return Field(std::move(data));
}

FieldElement primitive_element(const Field& field) {
  if (field.q() == 2) return field.one();
  for (int rep = 1; rep < field.q(); ++rep) {
    FieldElement a = field.element(rep);
    if (element_order(a) == field.q() - 1) return a;
  }
  throw std::logic_error("no generator found");  // unreachable: K* is cyclic
}

int element_order(const FieldElement& a) {
  if (a.is_zero()) throw std::invalid_argument("order of zero is undefined");
  const Field& f = a.field();
  int acc = a.rep();
  int t = 1;
  while (acc != 1) {
    acc = f.mul(acc, a.rep());
    ++t;
  }
  return t;
}

std::vector<FieldElement> enumerate_elements(const Field& field) {
  std::vector<FieldElement> out;
  out.reserve(field.q());
  for (int rep = 0; rep < field.q(); ++rep) out.push_back(field.element(rep));
  return out;
}

}  // namespace civan
