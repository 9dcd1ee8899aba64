#include "simplest/matrix.hpp"

#include <algorithm>

namespace simplest {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Brings rows into echelon form in place and returns the rank. The first
// `rank` rows are the HNF; the remaining rows are zero.
std::size_t echelonize(IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  BigInt g, x, y, u, v, nr, ni;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      if (a(r, col) == 0) {
        a.swap_rows(r, i);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a(r, col).get_mpz_t(),
                 a(i, col).get_mpz_t());
      mpz_divexact(u.get_mpz_t(), a(r, col).get_mpz_t(), g.get_mpz_t());
      mpz_divexact(v.get_mpz_t(), a(i, col).get_mpz_t(), g.get_mpz_t());
      for (std::size_t j = col; j < cols; ++j) {
        nr = x * a(r, j) + y * a(i, j);
        ni = u * a(i, j) - v * a(r, j);
        a(r, j) = nr;
        a(i, j) = ni;
      }
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0)
      for (std::size_t j = col; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      if (a(i, col) == 0) continue;
      BigInt q = floor_div(a(i, col), a(r, col));
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= q * a(r, j);
    }
    ++r;
  }
  return r;
}

IntMatrix take_rows(const IntMatrix& a, std::size_t count) {
  IntMatrix out(count, a.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  IntMatrix a = m;
  if (echelonize(a) != m.rows()) throw ArithmeticError("hnf: input is rank deficient");
  return a;
}

IntMatrix hnf_of_generators(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = echelonize(a);
  return take_rows(a, r);
}

IntMatrix hnf_lower(const IntMatrix& m) {
  const std::size_t cols = m.cols();
  IntMatrix rev(m.rows(), cols);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) rev(i, j) = m(i, cols - 1 - j);
  IntMatrix h = hnf_of_generators(rev);
  IntMatrix out(h.rows(), cols);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(h.rows() - 1 - i, j) = h(i, cols - 1 - j);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(k, piv);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) throw ArithmeticError("matrix is singular");
    a.swap_rows(k, piv);
    inv.swap_rows(k, piv);
    Rational s = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= s;
      inv(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return echelonize(a);
}

}  // namespace simplest
