#pragma once

// The generalized simplest families f^(n)_m(X) and r^(n)(X), their integer
// specializations f^(n)_t, and exact checks of their structural identities.

#include <optional>
#include <string>
#include <vector>

#include "simplest/poly.hpp"

namespace simplest {

enum class FamilyKind { F, R };

struct FamilyPoly {
  unsigned n = 0;
  FamilyKind kind = FamilyKind::F;
  QmPoly poly;  ///< coefficients are polynomials in m
};

/// 6-periodic coefficient functions.
MPoly g_value(unsigned i);
long h_value(unsigned i);

/// f^(n)_m(X) = sum_i binom(n, i) X^i g(n - i).
FamilyPoly build_f(unsigned n);
/// r^(n)(X) = sum_i binom(n, i) X^i h(n - i).
FamilyPoly build_r(unsigned n);
/// r^(n) as an integer polynomial.
ZPoly r_poly(unsigned n);

/// f^(n)_m at a concrete rational m.
QPoly f_at(unsigned n, const Rational& m);

/// m^2 + m + 1.
Rational norm_form(const Rational& m);
MPoly norm_form_poly();

enum class MRule { Identity, Third };

struct SpecializedPoly {
  unsigned n = 0;
  long t = 0;
  MRule rule = MRule::Identity;
  ZPoly poly;
};

/// m = t when n = 1, 2 mod 3 and m = t/3 when 3 | n.
MRule m_rule(unsigned n);
Rational m_of(unsigned n, long t);
SpecializedPoly specialize(unsigned n, long t);

/// t^2 + t + 1 (n = 1, 2 mod 3) or t^2 + 3t + 9 (3 | n).
BigInt q_of(unsigned n, long t);

struct CheckItem {
  std::string name;
  unsigned n = 0;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool passed() const;
  std::optional<CheckItem> first_failure() const;
  void add(std::string name, unsigned n, bool pass, std::string detail = {});
  void append(const CheckReport& other);
};

/// Both recursions, the derivative identities and the reflection
/// r(X) = (-1)^{n-1} r(-X-1), as exact identities in Q[m][X], for n <= n_max.
CheckReport check_recursions(unsigned n_max);

/// Rebuilds f^(n) from f^(0) = 1, r^(0) = 0 through the recursions and
/// compares with the closed-form definition.
CheckReport check_recursion_reproduces_definition(unsigned n_max);

/// (X + a + 1)^n f((aX - 1)/(X + a + 1)) == f(a) f(X) - (m^2+m+1) r(a) r(X)
/// at every (m, a) in the product of the sample sets.
CheckReport check_transform_identity(unsigned n, const std::vector<Rational>& m_samples,
                                     const std::vector<Rational>& alpha_samples);

/// Same identity at explicit (m, a) pairs.
CheckReport check_transform_pairs(unsigned n,
                                  const std::vector<std::pair<Rational, Rational>>& pairs);

/// Left-hand side of the transform identity as a polynomial in X.
QPoly transform_lhs(unsigned n, const Rational& m, const Rational& alpha);
QPoly transform_rhs(unsigned n, const Rational& m, const Rational& alpha);

/// sum_i binom(n, i) p(i) with p = (a, b, c, -a, -b, -c) repeating.
Rational multisection_t(unsigned n, const Rational& a, const Rational& b, const Rational& c);

/// r^(n)(omega) == -(-sqrt(-3))^{n-1} for n <= n_max.
CheckReport check_r_at_omega(unsigned n_max);

struct QuadraticRemainderPeriod {
  QPoly remainder;          ///< T_n = r^(n) mod X^2 + X + 1
  QPoly shifted_remainder;  ///< T_{n+12}
  bool holds = false;       ///< T_{n+12} == 729 T_n
};

QuadraticRemainderPeriod remainder_mod_quadratic_period(unsigned n);

/// res(r^(n), X^2 + X + 1) == 3^{n-1} for 1 <= n <= n_max.
CheckReport check_rn_quadratic_resultant(unsigned n_max);
/// res(r^(n), f^(n)) == 3^{n(n-1)/2} (-1)^{n(n+1)/2} and
/// res(f^(n), f^(n-1)) == (m^2+m+1)^{n-1} 3^{(n-1)(n-2)/2} (-1)^{n(n-1)/2}.
CheckReport check_resultant_laws(unsigned n, const std::vector<Rational>& m_samples);
/// res(r^(n), f^(n)) computed symbolically over Q[m]; a nonzero constant
/// shows the two polynomials never share a root.
CheckReport check_symbolic_coprime(unsigned n_max);

/// 3^{(n-1)(n-2)/2} n^n (m^2+m+1)^{n-1}.
Rational discriminant_closed_form(unsigned n, const Rational& m);
/// Integer-parameter branch for f^(n)_t.
BigInt specialized_discriminant_closed_form(unsigned n, long t);

CheckReport check_discriminants(unsigned n, const std::vector<Rational>& m_samples,
                                const std::vector<long>& t_samples);

}  // namespace simplest
