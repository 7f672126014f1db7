#pragma once

#include <cstddef>
#include <vector>

#include "ellbott/rational.hpp"

namespace ellbott {

/// Dense matrix over the rationals with exact elimination. Rank and
/// kernel computations never touch floating point.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  /// Columns form a basis of the right kernel {x : Mx = 0}.
  QMatrix kernel_basis() const;
  static QMatrix mul(const QMatrix& a, const QMatrix& b);

 private:
  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

}  // namespace ellbott
