#include "civan/param.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace civan {

std::vector<int> support(const ExponentVector& v) {
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) out.push_back(static_cast<int>(i));
  return out;
}

ParamSet make_param_set(Field field, int n, std::vector<ExponentVector> monomials) {
  if (!field) throw std::invalid_argument("param set needs a field");
  if (n < 1) throw std::invalid_argument("ambient variable count must be >= 1");
  if (monomials.empty()) throw std::invalid_argument("param set needs at least one monomial");
  for (const ExponentVector& v : monomials) {
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("exponent vector length does not match n");
    if (std::all_of(v.begin(), v.end(), [](int e) { return e == 0; }))
      throw std::invalid_argument("constant monomial (empty support) is not allowed");
    for (int e : v)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }
  std::set<ExponentVector> distinct(monomials.begin(), monomials.end());
  if (distinct.size() != monomials.size())
    throw std::invalid_argument("monomials must be pairwise distinct");
  return ParamSet{std::move(field), n, std::move(monomials)};
}

bool is_clutter_type(const ParamSet& ps) {
  std::vector<std::set<int>> supports;
  supports.reserve(ps.monomials.size());
  for (const ExponentVector& v : ps.monomials) {
    std::vector<int> s = support(v);
    supports.emplace_back(s.begin(), s.end());
  }
  for (size_t i = 0; i < supports.size(); ++i) {
    for (size_t j = 0; j < supports.size(); ++j) {
      if (i == j) continue;
      if (std::includes(supports[j].begin(), supports[j].end(), supports[i].begin(),
                        supports[i].end()))
        return false;
    }
  }
  return true;
}

Clutter make_clutter(int n, std::vector<std::vector<int>> edges) {
  if (n < 1) throw std::invalid_argument("clutter needs at least one vertex");
  for (std::vector<int>& e : edges) {
    if (e.empty()) throw std::invalid_argument("empty edge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.front() < 0 || e.back() >= n) throw std::invalid_argument("edge vertex out of range");
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = 0; j < edges.size(); ++j) {
      if (i == j) continue;
      if (std::includes(edges[j].begin(), edges[j].end(), edges[i].begin(), edges[i].end()))
        throw std::invalid_argument("clutter edges must not contain one another");
    }
  }
  return Clutter{n, std::move(edges)};
}

ParamSet clutter_to_paramset(const Clutter& c, Field field) {
  std::vector<ExponentVector> monomials;
  monomials.reserve(c.edges.size());
  for (const std::vector<int>& e : c.edges) {
    ExponentVector v(c.n, 0);
    for (int vertex : e) v[vertex] = 1;
    monomials.push_back(std::move(v));
  }
  return make_param_set(std::move(field), c.n, std::move(monomials));
}

}  // namespace civan
