#ifndef CIVAN_LINALG_HPP
#define CIVAN_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "civan/field.hpp"

namespace civan {

/// Dense row-major matrix over a Field. Entries are packed reps; the field
/// handle is stored once. Desk-scale only: no sparsity, no blocking.
class Matrix {
 public:
  Matrix(Field field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        entries_(static_cast<size_t>(rows) * cols, 0) {}

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int rep_at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  void set_rep(int i, int j, int rep) { entries_[static_cast<size_t>(i) * cols_ + j] = static_cast<uint8_t>(rep); }

  FieldElement at(int i, int j) const { return field_.element(rep_at(i, j)); }
  void set(int i, int j, const FieldElement& v);

  Matrix transposed() const;

  bool operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<uint8_t> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivot_cols;  // ascending
};

/// Reduced row-echelon form: pivots 1, zeros above and below, leftmost-pivot
/// first-nonzero-row elimination order. Deterministic.
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Basis of the right kernel {v : M v = 0}, one vector per free column of the
/// rref, in ascending free-column order. Size = cols - rank.
std::vector<std::vector<FieldElement>> kernel_basis(const Matrix& m);

/// Incremental row-echelon accumulator over packed reps. insert() reduces
/// the row against the current pivots and absorbs it when independent.
class Echelon {
 public:
  Echelon(Field field, int cols) : field_(std::move(field)), cols_(cols) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::map<int, std::vector<uint8_t>>& rows() const { return rows_; }

  bool insert(std::vector<uint8_t> row);

 private:
  Field field_;
  int cols_;
  std::map<int, std::vector<uint8_t>> rows_;  // pivot column -> normalized row
};

}  // namespace civan

#endif
