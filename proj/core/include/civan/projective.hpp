#ifndef CIVAN_PROJECTIVE_HPP
#define CIVAN_PROJECTIVE_HPP

#include <cstdint>
#include <vector>

#include "civan/field.hpp"
#include "civan/param.hpp"

namespace civan {

/// A point of P^{s-1} held by its canonical representative: the first
/// nonzero coordinate is 1, so projective equality is plain data equality.
struct ProjectivePoint {
  std::vector<FieldElement> coords;

  std::vector<int> reps() const;
  bool operator==(const ProjectivePoint& other) const { return coords == other.coords; }
};

/// Scales a nonzero vector to canonical form. Throws on the zero vector.
ProjectivePoint canonicalize(const std::vector<FieldElement>& raw);

/// Deduplicated point set with a deterministic order (ascending coordinate
/// reps, lexicographic).
class PointSet {
 public:
  PointSet(Field field, int s) : field_(std::move(field)), s_(s) {}

  const Field& field() const { return field_; }
  int s() const { return s_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<ProjectivePoint>& points() const { return points_; }

  void insert(const ProjectivePoint& p);
  bool contains(const ProjectivePoint& p) const;

  bool operator==(const PointSet& other) const {
    return field_ == other.field_ && s_ == other.s_ && points_ == other.points_;
  }

 private:
  Field field_;
  int s_;
  std::vector<ProjectivePoint> points_;  // sorted by reps(), unique
};

/// All well-defined points [(x^{v_1},...,x^{v_s})] as x runs over K^n.
/// Plain brute force over the q^n tuples; throws budget_error when q^n
/// exceeds the budget.
PointSet enumerate_set(const ParamSet& ps, uint64_t point_budget = 10'000'000);

/// Points with every coordinate nonzero; (q-1)^{s-1} of them.
PointSet projective_torus(int s, const Field& field);

/// True iff the componentwise product of any two canonical representatives
/// is zero or again in the set.
bool monoid_closed(const PointSet& x);

PointSet intersect(const PointSet& a, const PointSet& b);

}  // namespace civan

#endif
