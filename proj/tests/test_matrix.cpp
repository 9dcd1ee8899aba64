#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simplest/matrix.hpp"

using namespace simplest;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long span) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
  return m;
}

/// Every row of `a` is an integer combination of the rows of the square
/// nonsingular `b`.
bool rows_in_lattice(const IntMatrix& a, const IntMatrix& b) {
  const RatMatrix inv = inverse(to_rational(b));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j) {
      Rational x = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) x += a(i, k) * inv(k, j);
      if (!is_integral(x)) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("hnf example") {
    CHECK(hnf(IntMatrix{{2, 0}, {1, 1}}) == IntMatrix{{1, 1}, {0, 2}});
    CHECK_THROWS_AS(hnf(IntMatrix{{1, 2}, {2, 4}}), ArithmeticError);
  }

  TEST_CASE("hnf shape and lattice") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + rng() % 5;
      IntMatrix m = random_matrix(rng, n, n, 9);
      if (determinant(m) == 0) continue;
      const IntMatrix h = hnf(m);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(h(i, i) > 0);
        for (std::size_t j = 0; j < i; ++j) CHECK(h(i, j) == 0);
        for (std::size_t k = 0; k < i; ++k) CHECK((h(k, i) >= 0 && h(k, i) < h(i, i)));
      }
      CHECK(abs(determinant(h)) == abs(determinant(m)));
      CHECK(rows_in_lattice(m, h));
      CHECK(rows_in_lattice(h, m));
      // Canonical: any unimodular change of basis gives the same form.
      IntMatrix u = IntMatrix::identity(n);
      u(0, n - 1) = 3;
      u(n - 1, 0) = -2;
      u(n - 1, n - 1) = -5;  // det u = 1*(-5) - 3*(-2) = 1 for the 2x2 corner
      if (abs(determinant(u)) == 1) CHECK(hnf(u * m) == h);
    }
  }

  TEST_CASE("hnf of generators drops dependent rows") {
    const IntMatrix g{{4, 0}, {0, 6}, {2, 3}, {8, 12}};
    const IntMatrix h = hnf_of_generators(g);
    CHECK(h.rows() == 2);
    CHECK(abs(determinant(h)) == 12);
  }

  TEST_CASE("lower form") {
    const IntMatrix h = hnf_lower(IntMatrix{{2, 0}, {1, 1}});
    CHECK(h == IntMatrix{{2, 0}, {1, 1}});
    const IntMatrix l = hnf_lower(IntMatrix{{6, 0, 0}, {0, 6, 0}, {5, 7, 3}, {1, 0, 0}});
    CHECK(l(0, 0) == 1);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(l(i, j) == 0);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = j + 1; i < 3; ++i) CHECK((l(i, j) >= 0 && l(i, j) < l(j, j)));
  }

  TEST_CASE("determinant against the oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      const IntMatrix m = random_matrix(rng, n, n, 20);
      oracle::QMat q(n, oracle::QVec(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = m(i, j);
      REQUIRE(Rational(determinant(m)) == oracle::det(q));
      REQUIRE(determinant(to_rational(m)) == oracle::det(q));
    }
  }

  TEST_CASE("inverse and rank") {
    const RatMatrix t{{2, 2}, {2, 8}};
    CHECK(inverse(t) == RatMatrix{{Rational(2, 3), Rational(-1, 6)}, {Rational(-1, 6), Rational(1, 6)}});
    CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), ArithmeticError);
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}, {0, 1}}) == 2);
    CHECK(rank(IntMatrix{{0, 0}, {0, 0}}) == 0);
  }
}
