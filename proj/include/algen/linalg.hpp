#pragma once

#include <vector>

#include "algen/rational.hpp"

namespace algen {

/// Dense matrix of exact rationals. Row-major.
class RatMat {
 public:
  RatMat(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

 private:
  size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// In-place reduced row echelon form via exact Gaussian elimination.
/// Within each column the pivot row is chosen by smallest numerator bit
/// length among nonzero candidates. Returns the pivot column of each pivot
/// row, in order.
std::vector<size_t> rref(RatMat& m);

size_t rank(const RatMat& m);

/// Basis of the right nullspace {x : M x = 0}, one vector per free column,
/// ordered by free-column index. Each vector has the free coordinate 1.
std::vector<std::vector<Rat>> kernel_basis(const RatMat& m);

/// Solves M x = b for square nonsingular M. Throws std::domain_error if
/// singular.
std::vector<Rat> solve(const RatMat& m, const std::vector<Rat>& b);

/// Inverse of a square nonsingular matrix.
RatMat inverse(const RatMat& m);

}  // namespace algen
