#pragma once

#include <cstddef>
#include <vector>

#include "resdiff/rational.hpp"

namespace resdiff {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;

/// Builds a matrix from nested rows. Throws MalformedMatrix on ragged input.
RationalMatrix make_matrix(const std::vector<std::vector<Rational>>& rows);

/// Exact determinant. Each row is scaled to integers, the integer matrix is
/// reduced by fraction-free (Bareiss) elimination, and the row scales are
/// divided back out. Throws MalformedMatrix if not square.
Rational determinant(const RationalMatrix& m);

/// Fraction-free determinant of an integer matrix (taken by value, destroyed).
Integer bareiss_determinant(Matrix<Integer> m);

}  // namespace resdiff
