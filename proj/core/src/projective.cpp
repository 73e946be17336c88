#include "civan/projective.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "civan/errors.hpp"

namespace civan {

std::vector<int> ProjectivePoint::reps() const {
  std::vector<int> out;
  out.reserve(coords.size());
  for (const FieldElement& c : coords) out.push_back(c.rep());
  return out;
}

ProjectivePoint canonicalize(const std::vector<FieldElement>& raw) {
  int first_nonzero = -1;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i].is_zero()) {
      first_nonzero = static_cast<int>(i);
      break;
    }
  }
  if (first_nonzero < 0) throw std::invalid_argument("zero vector has no projective class");
  ProjectivePoint p{raw};
  if (raw[first_nonzero].rep() != 1) {
    FieldElement scale = inv(raw[first_nonzero]);
    for (FieldElement& c : p.coords) c = c * scale;
  }
  return p;
}

namespace {
bool rep_less(const ProjectivePoint& a, const ProjectivePoint& b) {
  const size_t n = std::min(a.coords.size(), b.coords.size());
  for (size_t i = 0; i < n; ++i) {
    const int d = a.coords[i].rep() - b.coords[i].rep();
    if (d != 0) return d < 0;
  }
  return a.coords.size() < b.coords.size();
}
}  // namespace

void PointSet::insert(const ProjectivePoint& p) {
  if (static_cast<int>(p.coords.size()) != s_)
    throw std::invalid_argument("point dimension mismatch");
  auto it = std::lower_bound(points_.begin(), points_.end(), p, rep_less);
  if (it != points_.end() && *it == p) return;
  points_.insert(it, p);
}

bool PointSet::contains(const ProjectivePoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p, rep_less);
  return it != points_.end() && *it == p;
}

PointSet enumerate_set(const ParamSet& ps, uint64_t point_budget) {
  const Field& f = ps.field;
  const int q = f.q();
  uint64_t total = 1;
  for (int i = 0; i < ps.n; ++i) {
    if (total > point_budget / static_cast<uint64_t>(q)) {
      total = point_budget + 1;
      break;
    }
    total *= static_cast<uint64_t>(q);
  }
  if (total > point_budget)
    throw budget_error("enumeration needs q^n = " + std::to_string(q) + "^" +
                       std::to_string(ps.n) + " tuples, over the budget of " +
                       std::to_string(point_budget));

  PointSet out(f, ps.s());
  std::vector<int> x(ps.n, 0);  // packed reps of the current tuple
  std::vector<FieldElement> value(ps.s(), f.zero());
  while (true) {
    bool some_nonzero = false;
    for (int i = 0; i < ps.s(); ++i) {
      int acc = 1;
      for (int j = 0; j < ps.n; ++j) {
        const int e = ps.monomials[i][j];
        if (e == 0) continue;
        if (x[j] == 0) {
          acc = 0;
          break;
        }
        acc = f.mul(acc, f.pow(x[j], static_cast<unsigned long long>(e)));
      }
      value[i] = f.element(acc);
      some_nonzero = some_nonzero || acc != 0;
    }
    if (some_nonzero) out.insert(canonicalize(value));

    int pos = ps.n - 1;
    while (pos >= 0 && x[pos] == q - 1) x[pos--] = 0;
    if (pos < 0) break;
    ++x[pos];
  }
  return out;
}

PointSet projective_torus(int s, const Field& field) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  PointSet out(field, s);
  std::vector<int> tail(s - 1, 1);  // nonzero reps for coordinates 2..s
  while (true) {
    std::vector<FieldElement> coords;
    coords.reserve(s);
    coords.push_back(field.one());
    for (int r : tail) coords.push_back(field.element(r));
    out.insert(ProjectivePoint{std::move(coords)});

    int pos = s - 2;
    while (pos >= 0 && tail[pos] == field.q() - 1) tail[pos--] = 1;
    if (pos < 0) break;
    ++tail[pos];
  }
  return out;
}

bool monoid_closed(const PointSet& x) {
  const Field& f = x.field();
  for (const ProjectivePoint& a : x.points()) {
    for (const ProjectivePoint& b : x.points()) {
      std::vector<FieldElement> prod(x.s(), f.zero());
      bool nonzero = false;
      for (int i = 0; i < x.s(); ++i) {
        prod[i] = a.coords[i] * b.coords[i];
        nonzero = nonzero || !prod[i].is_zero();
      }
      if (!nonzero) continue;  // the zero class is absorbed by the monoid
      if (!x.contains(canonicalize(prod))) return false;
    }
  }
  return true;
}

PointSet intersect(const PointSet& a, const PointSet& b) {
  if (a.field() != b.field() || a.s() != b.s())
    throw std::invalid_argument("point sets live in different spaces");
  PointSet out(a.field(), a.s());
  for (const ProjectivePoint& p : a.points())
    if (b.contains(p)) out.insert(p);
  return out;
}

}  // namespace civan
