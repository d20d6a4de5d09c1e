#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bhcr/rational.hpp"

namespace bhcr {

/// Dense square-or-rectangular integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Integer operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  std::vector<Integer> column(std::size_t j) const;

  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Throws std::overflow_error
/// if an intermediate leaves the 64-bit range.
Integer determinant(const IntMatrix& m);

/// adj(m), so that m * adj(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Exact m^{-1} * b. Requires det(m) != 0.
RationalVector solve(const IntMatrix& m, const RationalVector& b);

/// Columns of m^{-1} as rational vectors.
std::vector<RationalVector> inverse_columns(const IntMatrix& m);

RationalVector multiply(const IntMatrix& m, const RationalVector& v);

/// u^T m v.
Rational bilinear(const RationalVector& u, const IntMatrix& m, const RationalVector& v);

}  // namespace bhcr
