#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "simplest/arith.hpp"

namespace simplest {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ArithmeticError("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }
  friend bool operator<(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
    if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
    return x.a_ < y.a_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw ArithmeticError("matrix dimension mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << "]";
    }
    return os << "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

/// Row-style Hermite normal form: upper triangular with positive pivots and
/// every entry above a pivot reduced into [0, pivot). The input must have
/// full row rank; the result has the same shape and row lattice.
IntMatrix hnf(const IntMatrix& m);

/// HNF basis of the lattice spanned by arbitrary generating rows. Zero rows
/// of the echelon form are dropped, so the result has rank-many rows.
IntMatrix hnf_of_generators(const IntMatrix& m);

/// Column-reversed variant used for orders: row i has its pivot in column i,
/// zeros to the right of the pivot, and entries below each pivot reduced
/// into [0, pivot). For a lattice containing e_0 the first row is (d, 0, ...).
IntMatrix hnf_lower(const IntMatrix& m);

/// Bareiss fraction-free determinant.
BigInt determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Exact inverse; throws ArithmeticError when singular.
RatMatrix inverse(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

/// Number of linearly independent rows over Q.
std::size_t rank(const IntMatrix& m);

}  // namespace simplest
