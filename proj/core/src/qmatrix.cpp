#include "ellbott/qmatrix.hpp"

#include <stdexcept>

namespace ellbott {

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t j = col; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
    }
    const Rational inv = at(row, col).reciprocal();
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      const Rational f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix m = *this;
  return m.rref().size();
}

QMatrix QMatrix::kernel_basis() const {
  QMatrix m = *this;
  std::vector<std::size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  const std::size_t nullity = cols_ - pivots.size();
  QMatrix kernel(cols_, nullity);
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    kernel.at(free_col, k) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      kernel.at(pivots[p], k) = -m.at(p, free_col);
    }
    ++k;
  }
  return kernel;
}

QMatrix QMatrix::mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return r;
}

}  // namespace ellbott
