#include "civan/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace civan {

int Monomial::degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

bool divides(const Monomial& a, const Monomial& b) {
  if (a.exp.size() != b.exp.size()) throw std::invalid_argument("monomial length mismatch");
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.exp.size() != b.exp.size()) throw std::invalid_argument("monomial length mismatch");
  Monomial out = a;
  for (size_t i = 0; i < a.exp.size(); ++i) out.exp[i] = std::max(a.exp[i], b.exp[i]);
  return out;
}

Monomial product(const Monomial& a, const Monomial& b) {
  if (a.exp.size() != b.exp.size()) throw std::invalid_argument("monomial length mismatch");
  Monomial out = a;
  for (size_t i = 0; i < a.exp.size(); ++i) out.exp[i] = a.exp[i] + b.exp[i];
  return out;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::invalid_argument("quotient of non-divisible monomials");
  Monomial out = a;
  for (size_t i = 0; i < a.exp.size(); ++i) out.exp[i] = a.exp[i] - b.exp[i];
  return out;
}

std::strong_ordering compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.exp.size() != b.exp.size()) throw std::invalid_argument("monomial length mismatch");
  if (order.kind == OrderKind::GRevLex) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (int i = static_cast<int>(a.exp.size()) - 1; i >= 0; --i) {
      const int d = a.exp[i] - b.exp[i];
      if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  for (size_t i = 0; i < a.exp.size(); ++i) {
    const int d = a.exp[i] - b.exp[i];
    if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::term(const Field& field, const Monomial& mono, const FieldElement& coeff) {
  Polynomial p(field, static_cast<int>(mono.exp.size()));
  p.add_term(mono, coeff);
  return p;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [mono, c] : terms_)
    if (mono.degree() != d) return false;
  return true;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

void Polynomial::add_term(const Monomial& mono, const FieldElement& coeff) {
  if (static_cast<int>(mono.exp.size()) != nvars_)
    throw std::invalid_argument("monomial length does not match variable count");
  if (coeff.field() != field_) throw std::invalid_argument("coefficient from a different field");
  if (coeff.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
    return;
  }
  FieldElement sum = it->second + coeff;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

FieldElement Polynomial::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? field_.zero() : it->second;
}

std::pair<Monomial, FieldElement> Polynomial::leading(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (compare(order, it->first, best->first) == std::strong_ordering::greater) best = it;
  return *best;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) {
    *this = other;
    return *this;
  }
  if (field_ != other.field_ || nvars_ != other.nvars_)
    throw std::invalid_argument("polynomials from different rings");
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero() && nvars_ == 0) {
    *this = other.scaled(-other.field_.one());
    return *this;
  }
  if (field_ != other.field_ || nvars_ != other.nvars_)
    throw std::invalid_argument("polynomials from different rings");
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_)
    throw std::invalid_argument("polynomials from different rings");
  Polynomial out(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(product(ma, mb), ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial out(field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [mono, co] : terms_) out.add_term(mono, co * c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& mono, const FieldElement& coeff) const {
  Polynomial out(field_, nvars_);
  if (coeff.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.add_term(product(m, mono), c * coeff);
  return out;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  return scaled(inv(leading(order).second));
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  FieldElement acc = field_.zero();
  for (const auto& [mono, c] : terms_) {
    FieldElement v = c;
    for (int i = 0; i < nvars_; ++i)
      if (mono.exp[i] > 0) v = v * pow(point[i], static_cast<unsigned long long>(mono.exp[i]));
    acc = acc + v;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (is_zero() && other.is_zero()) return true;
  return field_ == other.field_ && nvars_ == other.nvars_ && terms_ == other.terms_;
}

std::vector<std::pair<Monomial, FieldElement>> sorted_terms(const Polynomial& f,
                                                            const MonomialOrder& order) {
  std::vector<std::pair<Monomial, FieldElement>> out(f.terms().begin(), f.terms().end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return compare(order, a.first, b.first) == std::strong_ordering::greater;
  });
  return out;
}

namespace {

std::string coeff_text(const FieldElement& c) {
  const Field& f = c.field();
  if (f.m() == 1) return std::to_string(c.rep());
  std::vector<int> digits = c.coeffs();
  std::string out;
  for (int i = f.m() - 1; i >= 0; --i) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (digits[i] != 1 || i == 0) out += std::to_string(digits[i]);
    if (i >= 1) {
      if (digits[i] != 1) out += "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return "(" + out + ")";
}

std::string mono_text(const Monomial& mono) {
  std::string out;
  for (size_t i = 0; i < mono.exp.size(); ++i) {
    if (mono.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (mono.exp[i] > 1) out += "^" + std::to_string(mono.exp[i]);
  }
  return out;
}

// Splits a coefficient into (negative?, magnitude-text). Prime fields use the
// symmetric representative; extension fields only fold exact -1.
std::pair<bool, std::string> signed_coeff(const FieldElement& c) {
  const Field& f = c.field();
  if (f.m() == 1) {
    const int r = c.rep();
    if (r > f.p() / 2 && f.p() > 2) return {true, std::to_string(f.p() - r)};
    return {false, std::to_string(r)};
  }
  if (f.p() > 2 && c == -f.one()) return {true, "1"};
  if (c == f.one()) return {false, "1"};
  return {false, coeff_text(c)};
}

}  // namespace

std::string to_text(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, c] : sorted_terms(f, order)) {
    auto [negative, mag] = signed_coeff(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mt = mono_text(mono);
    if (mt.empty()) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += mt;
    }
  }
  return out;
}

namespace {
void enumerate_exponents(int nvars, int pos, int remaining, std::vector<int>& cur,
                         std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(Monomial{cur});
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    enumerate_exponents(nvars, pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d, const MonomialOrder& order) {
  std::vector<Monomial> out;
  std::vector<int> cur(nvars, 0);
  enumerate_exponents(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(order, a, b) == std::strong_ordering::greater;
  });
  return out;
}

}  // namespace civan
