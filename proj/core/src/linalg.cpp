#include "civan/linalg.hpp"

#include <stdexcept>

namespace civan {

void Matrix::set(int i, int j, const FieldElement& v) {
  if (v.field() != field_) throw std::invalid_argument("entry from a different field");
  set_rep(i, j, v.rep());
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set_rep(j, i, rep_at(i, j));
  return t;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = a.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot_row = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (a.rep_at(i, col) != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) {
      for (int j = 0; j < a.cols(); ++j) {
        int tmp = a.rep_at(row, j);
        a.set_rep(row, j, a.rep_at(pivot_row, j));
        a.set_rep(pivot_row, j, tmp);
      }
    }
    const int scale = f.inv(a.rep_at(row, col));
    if (scale != 1)
      for (int j = col; j < a.cols(); ++j) a.set_rep(row, j, f.mul(scale, a.rep_at(row, j)));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const int factor = a.rep_at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < a.cols(); ++j)
        a.set_rep(i, j, f.sub(a.rep_at(i, j), f.mul(factor, a.rep_at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(a), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

bool Echelon::insert(std::vector<uint8_t> row) {
  for (const auto& [pivot, r] : rows_) {
    if (row[pivot] == 0) continue;
    const int factor = row[pivot];
    for (int j = pivot; j < cols_; ++j)
      row[j] = static_cast<uint8_t>(field_.sub(row[j], field_.mul(factor, r[j])));
  }
  int pivot = -1;
  for (int j = 0; j < cols_; ++j)
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  const int scale = field_.inv(row[pivot]);
  if (scale != 1)
    for (int j = pivot; j < cols_; ++j) row[j] = static_cast<uint8_t>(field_.mul(scale, row[j]));
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<std::vector<FieldElement>> basis;
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<FieldElement> v(m.cols(), f.zero());
    v[free_col] = f.one();
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
      int entry = r.reduced.rep_at(static_cast<int>(i), free_col);
      if (entry != 0) v[r.pivot_cols[i]] = f.element(f.neg(entry));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace civan
