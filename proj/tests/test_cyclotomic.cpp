#include <doctest.h>

#include "oracles.hpp"
#include "simplest/cyclotomic.hpp"
#include "simplest/family.hpp"

using namespace simplest;

namespace {

/// Complex value of an element of Q(zeta_N) under zeta_N -> e^{2 pi i / N}.
oracle::C numeric(const CycloElt& x) {
  const unsigned n = x.ring()->conductor();
  oracle::C acc = 0;
  for (std::size_t i = 0; i < x.rep().size(); ++i)
    acc += x.rep().coeffs()[i].get_d() * oracle::root_of_unity(n, static_cast<long>(i));
  return acc;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ZPoly{-1, 1});
    CHECK(cyclotomic_polynomial(3) == ZPoly{1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == ZPoly{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == ZPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(9) == ZPoly{1, 0, 0, 1, 0, 0, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), ArithmeticError);
  }

  TEST_CASE("roots of unity") {
    auto ring = CycloRing::make(12);
    const CycloElt w = omega(ring), one(ring, Rational(1));
    CHECK((w * w + w + one).is_zero());
    CHECK(*multiplicative_order(eps6(ring), 20) == 6);
    CHECK(eps6(ring) == embed_root(ring, 6, 5));
    const CycloElt s = sqrt_minus3(ring);
    CHECK(s * s == CycloElt(ring, Rational(-3)));
    CHECK(s == eps6(ring) - eps6(ring).pow(5));
    CHECK(*multiplicative_order(embed_root(ring, 4, 1), 20) == 4);
    CHECK_THROWS_AS(embed_root(ring, 5, 1), ArithmeticError);
    CHECK_THROWS_AS(embed_root(ring, 6, 2), ArithmeticError);
    CHECK_THROWS_AS(CycloElt(ring, Rational(0)).inverse(), ArithmeticError);
  }

  TEST_CASE("field operations") {
    auto ring = CycloRing::make(15);
    const CycloElt z = embed_root(ring, 15, 1);
    const CycloElt a = z + CycloElt(ring, Rational(2));
    CHECK(a * a.inverse() == CycloElt(ring, Rational(1)));
    CHECK(z.pow(15) == CycloElt(ring, Rational(1)));
    CHECK(z.pow(-1) * z == CycloElt(ring, Rational(1)));
  }

  TEST_CASE("alpha is a root of r and has Moebius order n") {
    for (unsigned n = 2; n <= 12; ++n) {
      const CycloElt alpha = alpha_of(n);
      CHECK(evaluate(r_poly(n), alpha).is_zero());
      const auto ord = moebius_matrix_order(alpha, 3 * n);
      REQUIRE(ord.order.has_value());
      CHECK(*ord.order == n);
      // Numeric cross-check of alpha against its defining expression.
      const oracle::C e6 = oracle::root_of_unity(6, 5), en = oracle::root_of_unity(n, 1);
      CHECK(std::abs(numeric(alpha) - e6 * (e6 + en) / (1.0 - en)) < 1e-9);
    }
    CHECK_THROWS_AS(alpha_of(1), ArithmeticError);
  }

  TEST_CASE("R shift identity") {
    for (unsigned n = 2; n <= 12; ++n) CHECK(check_R_shift(n));
  }
}
