#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "civan/linalg.hpp"

using namespace civan;

namespace {

Matrix from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[0].size(); ++j)
      m.set_rep(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  return m;
}

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, f.q() - 1);
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set_rep(i, j, pick(rng));
  return m;
}

}  // namespace

TEST_CASE("rref on identity and zero") {
  Field f = make_field(5, 1);
  Matrix id = from_rows(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  RrefResult r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivot_cols == std::vector<int>{0, 1, 2});

  Matrix zero(f, 2, 3);
  RrefResult z = rref(zero);
  CHECK(z.reduced == zero);
  CHECK(z.pivot_cols.empty());
  CHECK(kernel_basis(zero).size() == 3);
}

TEST_CASE("hand elimination over GF(3)") {
  Field f = make_field(3, 1);
  // row2 - 2*row1 = (0, -3) = (0, 0): rank 1.
  Matrix m = from_rows(f, {{1, 2}, {2, 1}});
  RrefResult r = rref(m);
  CHECK(r.pivot_cols == std::vector<int>{0});
  CHECK(r.reduced == from_rows(f, {{1, 2}, {0, 0}}));
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel vectors satisfy Mv = 0") {
  std::mt19937 rng(7);
  Field f = make_field(7, 1);
  for (int round = 0; round < 50; ++round) {
    Matrix m = random_matrix(f, 4, 6, rng);
    auto basis = kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) == 6 - rank(m));
    for (const auto& v : basis) {
      for (int i = 0; i < m.rows(); ++i) {
        FieldElement acc = f.zero();
        for (int j = 0; j < m.cols(); ++j) acc = acc + m.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("invertible matrix has empty kernel") {
  Field f = make_field(3, 1);
  Matrix m = from_rows(f, {{1, 1}, {0, 1}});
  CHECK(kernel_basis(m).empty());
  CHECK(rank(m) == 2);
}

TEST_CASE("rank properties on random matrices") {
  std::mt19937 rng(99);
  Field f5 = make_field(5, 1);
  Field f4 = make_field(2, 2);
  for (const Field& f : {f5, f4}) {
    for (int round = 0; round < 40; ++round) {
      Matrix m = random_matrix(f, 5, 7, rng);
      CHECK(rank(m) == rank(m.transposed()));
      CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == m.cols());
      RrefResult once = rref(m);
      RrefResult twice = rref(once.reduced);
      CHECK(once.reduced == twice.reduced);
      CHECK(once.pivot_cols == twice.pivot_cols);
    }
  }
}
