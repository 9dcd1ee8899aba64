#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simplest/poly.hpp"
#include "simplest/resultant.hpp"

using namespace simplest;

namespace {

oracle::QVec to_vec(const ZPoly& p) {
  oracle::QVec v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return v;
}

ZPoly random_poly(std::mt19937_64& rng, int deg) {
  std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = static_cast<long>(rng() % 21) - 10;
  if (c.back() == 0) c.back() = 1;
  return ZPoly(c);
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("ring operations") {
    const ZPoly a{1, 2, 1}, b{-1, 1};
    CHECK(a * b == ZPoly{-1, -1, 1, 1});
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(derivative(a) == ZPoly{2, 2});
    CHECK(poly_pow(b, 3) == ZPoly{-1, 3, -3, 1});
    CHECK(evaluate(a, BigInt(3)) == 16);
    CHECK_THROWS_AS(ZPoly{}.lead(), ArithmeticError);
  }

  TEST_CASE("division") {
    const QPoly a{Rational(1), Rational(0), Rational(0), Rational(1)};
    const QPoly b{Rational(1), Rational(1)};
    auto qr = divrem(a, b);
    CHECK(qr.remainder.is_zero());
    CHECK(qr.quotient * b == a);
    CHECK_THROWS_AS(divrem(a, QPoly{}), ArithmeticError);
    CHECK_THROWS_AS(divrem(ZPoly{1, 1}, ZPoly{1, 2}), ArithmeticError);
    // 2^3 (7X^3 + 5X^2 + 3) at X = -1/2.
    CHECK(pseudo_remainder(ZPoly{3, 0, 5, 7}, ZPoly{1, 2}) == ZPoly{27});
  }

  TEST_CASE("pseudo remainder identity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const ZPoly a = random_poly(rng, 6), b = random_poly(rng, 3);
      const ZPoly r = pseudo_remainder(a, b);
      // lc(b)^(da-db+1) a - r must be divisible by b over Q.
      const BigInt s = ipow(b.lead(), a.degree() - b.degree() + 1);
      auto qr = divrem(to_qpoly(ZPoly(a).scale(s) - r), to_qpoly(b).scale(Rational(1) / Rational(b.lead())));
      CHECK(qr.remainder.is_zero());
      CHECK(r.degree() < b.degree());
    }
  }

  TEST_CASE("taylor shift equals composition") {
    const ZPoly p{5, -3, 0, 2, 1};
    CHECK(taylor_shift(p, BigInt(4)) == compose(p, ZPoly{4, 1}));
    CHECK(taylor_shift(p, BigInt(-7)) == compose(p, ZPoly{-7, 1}));
  }

  TEST_CASE("resultant examples") {
    CHECK(resultant(ZPoly{BigInt(-5), BigInt(1)}, ZPoly{-1}) == -1);
    CHECK(resultant(ZPoly{-1, -2}, ZPoly{1, 1, 1}) == 3);
    CHECK_THROWS_AS(resultant(ZPoly{}, ZPoly{1, 1}), ArithmeticError);
    CHECK(discriminant(ZPoly{-2, -2, 1}) == 12);
    CHECK_THROWS_AS(discriminant(ZPoly{1, 1}), ArithmeticError);
  }

  TEST_CASE("resultant against the Sylvester oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const int da = 1 + static_cast<int>(rng() % 7), db = static_cast<int>(rng() % 7);
      const ZPoly a = random_poly(rng, da), b = random_poly(rng, db);
      const oracle::Q want = oracle::sylvester_resultant(to_vec(a), to_vec(b));
      REQUIRE(Rational(resultant(a, b)) == want);
      // Over Q as well.
      REQUIRE(resultant(to_qpoly(a), to_qpoly(b)) == want);
    }
  }

  TEST_CASE("discriminant against the oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      const ZPoly f = random_poly(rng, 2 + static_cast<int>(rng() % 6));
      REQUIRE(Rational(discriminant(f)) == oracle::discriminant(to_vec(f)));
    }
  }

  TEST_CASE("resultant over Q[m]") {
    // res(X - m, X + m) = b(m) = 2m.
    const MPoly m = MPoly::x();
    const QmPoly a{-m, MPoly::constant(1)}, b{m, MPoly::constant(1)};
    CHECK(resultant(a, b) == MPoly{Rational(0), Rational(2)});
  }
}
