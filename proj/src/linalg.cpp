#include "algen/linalg.hpp"

#include <stdexcept>

namespace algen {

std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivot_cols;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // pick the nonzero entry with the shortest numerator
    size_t best = m.rows();
    size_t best_bits = 0;
    for (size_t r = row; r < m.rows(); ++r) {
      if (m.at(r, col) == 0) continue;
      size_t bits = bit_length(m.at(r, col).get_num());
      if (best == m.rows() || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (size_t c = col; c < m.cols(); ++c)
        std::swap(m.at(row, c), m.at(best, c));
    Rat inv = Rat(1) / m.at(row, col);
    for (size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (size_t c = col; c < m.cols(); ++c)
        m.at(r, c) -= f * m.at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

size_t rank(const RatMat& m) {
  RatMat copy = m;
  return rref(copy).size();
}

std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
  RatMat r = m;
  std::vector<size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> solve(const RatMat& m, const std::vector<Rat>& b) {
  if (m.rows() != m.cols() || b.size() != m.rows())
    throw std::invalid_argument("solve: shape mismatch");
  RatMat aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != m.rows() || pivots.back() >= m.cols())
    throw std::domain_error("solve: singular matrix");
  std::vector<Rat> x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: not square");
  const size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n || pivots.back() >= n)
    throw std::domain_error("inverse: singular matrix");
  RatMat inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

}  // namespace algen
