#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simplest/integrality.hpp"

using namespace simplest;

namespace {

oracle::QVec qvec(const std::vector<BigInt>& v) { return oracle::QVec(v.begin(), v.end()); }

oracle::QVec poly_vec(const ZPoly& p) { return qvec(p.coeffs()); }

/// Characteristic polynomial through the multiplication-matrix oracle.
oracle::QVec oracle_charpoly(const FieldElt& e) {
  oracle::QVec elt;
  for (const auto& c : e.num) elt.push_back(make_rational(c, e.den));
  for (auto& c : elt) c.canonicalize();
  return oracle::charpoly(oracle::multiplication_matrix(poly_vec(e.field->poly()), elt));
}

}  // namespace

TEST_SUITE("integrality") {
  TEST_CASE("characteristic polynomial examples") {
    const FieldPtr k = NumberField::uncertified(2, 1);
    CHECK(k->poly() == ZPoly{-2, -2, 1});
    CHECK(char_poly(FieldElt::beta(k)) == to_qpoly(k->poly()));
    CHECK(char_poly(FieldElt::one(k)) == QPoly{Rational(1), Rational(-2), Rational(1)});
    CHECK(char_poly(FieldElt::make(k, {0, 1}, 2)) == QPoly{Rational(-1, 2), Rational(-1), Rational(1)});
    CHECK_FALSE(is_algebraic_integer(FieldElt::make(k, {0, 1}, 2)));
    const FieldPtr k3 = NumberField::certified(2, 3);
    CHECK(k3->poly() == ZPoly{-4, -6, 1});
    CHECK(is_algebraic_integer(FieldElt::make(k3, {-2, 1}, 2)));
  }

  TEST_CASE("characteristic polynomial against the matrix oracle") {
    std::mt19937_64 rng(17);
    for (unsigned n : {3u, 4u, 5u, 6u}) {
      const FieldPtr k = NumberField::certified(n, n % 3 ? 2 : 1);
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<BigInt> num(n);
        for (auto& c : num) c = static_cast<long>(rng() % 19) - 9;
        const FieldElt e = FieldElt::make(k, num, 1 + static_cast<long>(rng() % 6));
        const QPoly cp = char_poly(e);
        REQUIRE(oracle::QVec(cp.coeffs().begin(), cp.coeffs().end()) == oracle_charpoly(e));
        CHECK(trace(e) == -cp.coeff(n - 1));
      }
    }
  }

  TEST_CASE("integrality is closed under ring operations") {
    const FieldPtr k = NumberField::certified(4, 7);
    const Order o = integral_basis(k);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      FieldElt a = FieldElt::make(k, {0}), b = FieldElt::make(k, {0});
      for (std::size_t i = 0; i < 4; ++i) {
        a = a + FieldElt::make(k, {static_cast<long>(rng() % 7) - 3}) * o.element(i);
        b = b + FieldElt::make(k, {static_cast<long>(rng() % 7) - 3}) * o.element(i);
      }
      REQUIRE(is_algebraic_integer(a));
      REQUIRE(is_algebraic_integer(b));
      CHECK(is_algebraic_integer(a + b));
      CHECK(is_algebraic_integer(a * b));
    }
  }

  TEST_CASE("power sums against the companion oracle") {
    const FieldPtr k = NumberField::certified(5, 2);
    const auto& s = k->power_traces();
    REQUIRE(s.size() == 9);
    for (unsigned j = 0; j < s.size(); ++j) CHECK(Rational(s[j]) == oracle::power_trace(poly_vec(k->poly()), j));
    CHECK(s[1] == 10);  // n m
  }

  TEST_CASE("Eisenstein certificates") {
    auto w = eisenstein_shift_check(4, 2);
    REQUIRE(w.has_value());
    CHECK(w->prime == 7);
    CHECK(is_eisenstein(w->shifted, 7));
    CHECK(w->shifted == taylor_shift(specialize(4, 2).poly, BigInt(2)));
    CHECK_FALSE(eisenstein_shift_check(6, 5).has_value());
    CHECK_FALSE(eisenstein_shift_check(3, 0).has_value());
    CHECK_FALSE(is_eisenstein(ZPoly{4, 2, 1}, 2));
    CHECK(is_eisenstein(ZPoly{2, 2, 1}, 2));
    // Every returned witness verifies by hand.
    for (unsigned n = 2; n <= 9; ++n)
      for (long t = -25; t <= 25; ++t)
        if (auto v = eisenstein_shift_check(n, t)) {
          const ZPoly& g = v->shifted;
          CHECK(g.lead() % v->prime != 0);
          for (int i = 0; i < g.degree(); ++i) CHECK(g.coeffs()[i] % v->prime == 0);
          CHECK(g.coeff(0) % (v->prime * v->prime) != 0);
        }
  }

  TEST_CASE("parameter gate") {
    auto a = valid_parameter(6, 5, Gate::Strict);
    CHECK_FALSE(a.valid);
    CHECK(a.reason.find("not squarefree") != std::string::npos);
    CHECK(valid_parameter(4, 2, Gate::Strict).valid);
    CHECK(*valid_parameter(4, 2, Gate::Strict).witness == 7);
    CHECK_FALSE(valid_parameter(3, 3, Gate::Strict).valid);
    CHECK_FALSE(valid_parameter(3, 3, Gate::Relaxed).valid);
    CHECK_FALSE(valid_parameter(6, 3, Gate::Strict).valid);
    CHECK_THROWS_AS(NumberField::certified(3, 0), ParameterNotCovered);
    CHECK_THROWS_AS(integral_basis(NumberField::uncertified(2, 1)), ParameterNotCovered);
  }

  TEST_CASE("index and period bounds") {
    CHECK(index_bound_Cn(2) == 2);
    CHECK(index_bound_Cn(3) == 3);
    CHECK(index_bound_Cn(4) == 144);
    CHECK(period_bound(2) == 36);
    for (unsigned n = 2; n <= 9; ++n) {
      // Oracle: greatest n0 with n0^4 | 3^{n^3} n^{2n^2}, by exponent counting.
      BigInt want = 1;
      for (const auto& p : oracle::naive_prime_divisors(3 * n)) {
        unsigned e = 0;
        for (unsigned m = n; m % p.get_ui() == 0; m /= p.get_ui()) ++e;
        unsigned long total = 2ul * n * n * e + (p == 3 ? 1ul * n * n * n : 0ul);
        want *= ipow(BigInt(p), total / 4);
      }
      CHECK(period_bound(n) == want);
      const BigInt c = index_bound_Cn(n);
      CHECK(index_branch_bound(n) % (c * c) == 0);
    }
  }

  TEST_CASE("p-maximal orders") {
    const FieldPtr k31 = NumberField::certified(3, 1);
    for (auto s : {Strategy::Enumerate, Strategy::Radical}) {
      CHECK(p_maximal_order(k31, 3, s).index() == 1);
      const Order o = p_maximal_order(NumberField::certified(2, 3), 2, s);
      CHECK(o.den == 2);
      CHECK(o.basis == IntMatrix{{2, 0}, {0, 1}});
      CHECK(p_maximal_order(NumberField::uncertified(2, 1), 2, s).index() == 1);
    }
    CHECK_THROWS_AS(p_maximal_order(k31, 4, Strategy::Radical), ArithmeticError);
  }

  TEST_CASE("integral bases") {
    const Order o31 = integral_basis(NumberField::certified(3, 1));
    CHECK(o31.den == 1);
    CHECK(o31.basis == IntMatrix::identity(3));
    const Order o23 = integral_basis(NumberField::certified(2, 3));
    CHECK(o23.index() == 2);
    CHECK(order_discriminant(o23) == 13);
    CHECK(Order::equation_order(NumberField::uncertified(2, 1)).index() == 1);
    CHECK(order_discriminant(Order::equation_order(NumberField::uncertified(2, 1))) == 12);

    const FieldPtr k47 = NumberField::certified(4, 7);
    const Order e = integral_basis(k47, Strategy::Enumerate), r = integral_basis(k47, Strategy::Radical);
    CHECK(e.same_lattice(r));
    CHECK(index_bound_Cn(4) % r.index() == 0);
    CHECK(r.basis(0, 0) == r.den);
    for (std::size_t i = 0; i < 4; ++i) CHECK(is_algebraic_integer(r.element(i)));
  }

  TEST_CASE("quadratic fields against the closed form") {
    for (long t = -60; t <= 60; ++t) {
      if (!valid_parameter(2, t, Gate::Strict).valid) continue;
      const FieldPtr k = NumberField::certified(2, t);
      // beta = t +- sqrt(t^2 + t + 1).
      const oracle::Z d = oracle::squarefree_kernel(oracle::Z(t * t + t + 1));
      REQUIRE(order_discriminant(integral_basis(k, Strategy::Radical)) == oracle::quadratic_field_discriminant(d));
      REQUIRE(order_discriminant(integral_basis(k, Strategy::Enumerate)) == oracle::quadratic_field_discriminant(d));
    }
  }

  TEST_CASE("orders from generators and joins") {
    const FieldPtr k = NumberField::certified(2, 3);
    const Order a = Order::from_generators(k, 4, IntMatrix{{4, 0}, {0, 2}});
    CHECK(a.den == 2);
    CHECK(a.basis == IntMatrix{{2, 0}, {0, 1}});
    CHECK(join(a, Order::equation_order(k)).same_lattice(a));
    CHECK_THROWS_AS(Order::from_generators(k, 1, IntMatrix{{1, 0}, {2, 0}}), ArithmeticError);
    CHECK(candidate_primes(12) == std::vector<BigInt>{2, 3});
    CHECK(candidate_primes(5) == std::vector<BigInt>{3, 5});
  }
}
