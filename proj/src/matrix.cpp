#include "bhcr/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace bhcr {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

__extension__ using Wide = __int128;

Integer narrow(Wide x) {
  if (x > static_cast<Wide>(INT64_MAX) || x < static_cast<Wide>(INT64_MIN))
    throw std::overflow_error("integer overflow in exact elimination");
  return static_cast<Integer>(x);
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Wide num = static_cast<Wide>(a(i, j)) * a(k, k) - static_cast<Wide>(a(i, k)) * a(k, j);
        a(i, j) = narrow(num / prev);  // exact by Sylvester's identity
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

RationalVector multiply(const IntMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("dimension mismatch in matrix product");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] += Rational(m(i, j)) * v[j];
  return out;
}

RationalVector solve(const IntMatrix& m, const RationalVector& b) {
  Integer det = determinant(m);
  if (det == 0) throw std::domain_error("singular matrix");
  RationalVector x = multiply(adjugate(m), b);
  for (auto& e : x) e /= Rational(det);
  return x;
}

std::vector<RationalVector> inverse_columns(const IntMatrix& m) {
  Integer det = determinant(m);
  if (det == 0) throw std::domain_error("singular matrix");
  IntMatrix adj = adjugate(m);
  std::vector<RationalVector> cols(m.cols(), RationalVector(m.rows()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) cols[j][i] = Rational(adj(i, j), det);
  return cols;
}

Rational bilinear(const RationalVector& u, const IntMatrix& m, const RationalVector& v) {
  if (u.size() != m.rows() || v.size() != m.cols())
    throw std::invalid_argument("dimension mismatch in bilinear form");
  RationalVector mv = multiply(m, v);
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * mv[i];
  return s;
}

}  // namespace bhcr
