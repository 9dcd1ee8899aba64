#include <doctest.h>

#include "oracles.hpp"
#include "simplest/arith.hpp"

using namespace simplest;

TEST_SUITE("arith") {
  TEST_CASE("valuations") {
    CHECK(p_adic_valuation(BigInt(72), BigInt(2)) == 3);
    CHECK(p_adic_valuation(BigInt(72), BigInt(3)) == 2);
    CHECK(p_adic_valuation(BigInt(-49), BigInt(7)) == 2);
    CHECK(p_adic_valuation(Rational(5, 27), BigInt(3)) == -3);
    CHECK_THROWS_AS(p_adic_valuation(BigInt(0), BigInt(3)), ArithmeticError);
  }

  TEST_CASE("factor agrees with trial division") {
    for (long n = 2; n < 3000; ++n) {
      std::vector<BigInt> ps;
      for (const auto& pe : factor(BigInt(n))) ps.push_back(pe.prime);
      std::vector<BigInt> want;
      for (const auto& p : oracle::naive_prime_divisors(n)) want.push_back(p);
      REQUIRE(ps == want);
    }
  }

  TEST_CASE("factor reconstructs large composites") {
    const BigInt a = BigInt("1000000007") * BigInt("998244353") * BigInt("1000000007") * 12;
    BigInt prod = 1;
    for (const auto& pe : factor(a)) {
      CHECK(is_prime(pe.prime));
      prod *= ipow(pe.prime, pe.exponent);
    }
    CHECK(prod == a);
    CHECK(factor(BigInt(1)).empty());
    CHECK(factor(BigInt(-1)).empty());
  }

  TEST_CASE("squarefree against the naive oracle") {
    for (long n = 1; n < 5000; ++n) REQUIRE(is_squarefree(BigInt(n)) == oracle::naive_squarefree(n));
    CHECK_FALSE(is_squarefree(BigInt(49)));
    CHECK(is_squarefree(BigInt(57)));
  }

  TEST_CASE("three-free part and root divisors") {
    CHECK(three_free_part(BigInt(162)) == 2);
    CHECK(three_free_part(BigInt(-27)) == -1);
    CHECK(largest_square_root_divisor(BigInt(12)) == 2);
    CHECK(largest_square_root_divisor(BigInt(27)) == 3);
    CHECK(largest_square_root_divisor(BigInt(81) * 256) == 144);
    CHECK(largest_root_divisor(BigInt(1296), 4) == 6);
    CHECK_THROWS_AS(largest_root_divisor(BigInt(0), 2), ArithmeticError);
  }

  TEST_CASE("powers and binomials") {
    CHECK(ipow(BigInt(3), 5) == 243);
    CHECK(ipow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(ipow(Rational(0), -1), ArithmeticError);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(make_rational(BigInt(6), BigInt(-4)) == Rational(-3, 2));
    CHECK(is_integral(make_rational(8, 4)));
    CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  }
}
