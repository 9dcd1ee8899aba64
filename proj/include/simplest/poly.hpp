#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Poly<BigInt>   : Z[X]
// Poly<Rational> : Q[X], also used as the parameter ring Q[m]
// Poly<Poly<Rational>> : Q[m][X], the home of the symbolic families.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "simplest/arith.hpp"

namespace simplest {

template <class R>
struct Ring;

template <>
struct Ring<BigInt> {
  static BigInt zero() { return 0; }
  static BigInt one() { return 1; }
  static bool is_zero(const BigInt& a) { return sgn(a) == 0; }
  static bool is_unit(const BigInt& a) { return a == 1 || a == -1; }
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw ArithmeticError("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      throw ArithmeticError("inexact integer division");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static BigInt from_int(long v) { return v; }
  static std::string str(const BigInt& a) { return a.get_str(); }
};

template <>
struct Ring<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_unit(const Rational& a) { return sgn(a) != 0; }
  static Rational exact_div(const Rational& a, const Rational& b) {
    if (b == 0) throw ArithmeticError("division by zero");
    return a / b;
  }
  static Rational from_int(long v) { return v; }
  static std::string str(const Rational& a) { return a.get_str(); }
};

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}); }
  static Poly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, Ring<R>::zero());
    v[k] = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(Ring<R>::one(), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Ring<R>::zero(); }
  const R& lead() const {
    if (c_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Ring<R>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Ring<R>::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& scale(const R& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, Ring<R>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Ring<R>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const R& s, Poly a) { return a.scale(s); }
  friend Poly operator*(Poly a, const R& s) { return a.scale(s); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

 private:
  void trim() {
    while (!c_.empty() && Ring<R>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<Rational>;
/// Q[m] coefficients for Q[m][X].
using MPoly = Poly<Rational>;
using QmPoly = Poly<MPoly>;

template <class R>
struct DivRem {
  Poly<R> quotient;
  Poly<R> remainder;
};

template <class R>
DivRem<R> divrem(const Poly<R>& a, const Poly<R>& b);

/// Q[m] as a coefficient ring: exact division is polynomial division that
/// must leave no remainder.
template <>
struct Ring<MPoly> {
  static MPoly zero() { return {}; }
  static MPoly one() { return MPoly::constant(1); }
  static bool is_zero(const MPoly& a) { return a.is_zero(); }
  static bool is_unit(const MPoly& a) { return a.degree() == 0; }
  static MPoly exact_div(const MPoly& a, const MPoly& b) {
    auto qr = divrem(a, b);
    if (!qr.remainder.is_zero()) throw ArithmeticError("inexact polynomial division");
    return qr.quotient;
  }
  static MPoly from_int(long v) { return MPoly::constant(Rational(v)); }
  static std::string str(const MPoly& a);
};

template <class R>
DivRem<R> divrem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (!Ring<R>::is_unit(b.lead()))
    throw ArithmeticError("divrem needs an invertible leading coefficient");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Poly<R>{}, a};
  std::vector<R> q(static_cast<std::size_t>(da - db + 1), Ring<R>::zero());
  const R& lb = b.lead();
  for (int k = da; k >= db; --k) {
    const R& top = rem[static_cast<std::size_t>(k)];
    if (Ring<R>::is_zero(top)) continue;
    R f = Ring<R>::exact_div(top, lb);
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly<R>(std::move(q)), Poly<R>(std::move(rem))};
}

/// lc(b)^{deg a - deg b + 1} * a mod b, computed without division.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw ArithmeticError("pseudo-division by zero polynomial");
  const int db = b.degree();
  int da = a.degree();
  if (da < db) return a;
  std::vector<R> rem = a.coeffs();
  const R& lb = b.lead();
  for (int k = da; k >= db; --k) {
    R top = rem[static_cast<std::size_t>(k)];
    for (int j = 0; j < k; ++j) rem[static_cast<std::size_t>(j)] *= lb;
    rem[static_cast<std::size_t>(k)] = Ring<R>::zero();
    for (int j = 0; j < db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return Poly<R>(std::move(rem));
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
  if (p.degree() <= 0) return {};
  std::vector<R> d(p.size() - 1, Ring<R>::zero());
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p.coeffs()[i] * Ring<R>::from_int(static_cast<long>(i));
  return Poly<R>(std::move(d));
}

/// Horner evaluation into any ring T that R embeds into.
template <class R, class T, class Embed>
T evaluate(const Poly<R>& p, const T& x, Embed embed) {
  if (p.is_zero()) return embed(Ring<R>::zero());
  T acc = embed(p.coeffs().back());
  for (int i = p.degree() - 1; i >= 0; --i) {
    acc = acc * x;
    acc = acc + embed(p.coeffs()[static_cast<std::size_t>(i)]);
  }
  return acc;
}

template <class R, class T>
T evaluate(const Poly<R>& p, const T& x) {
  return evaluate(p, x, [](const R& c) { return T(c); });
}

/// a(X + c).
template <class R>
Poly<R> taylor_shift(const Poly<R>& a, const R& c) {
  if (a.is_zero()) return a;
  std::vector<R> r = a.coeffs();
  const std::size_t n = r.size();
  // Repeated synthetic division; O(n^2).
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 2; j + 1 > i; --j) r[j] += c * r[j + 1];
  return Poly<R>(std::move(r));
}

/// a(b(X)).
template <class R>
Poly<R> compose(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> acc;
  for (int i = a.degree(); i >= 0; --i) acc = acc * b + Poly<R>::constant(a.coeffs()[static_cast<std::size_t>(i)]);
  return acc;
}

template <class S, class R, class F>
Poly<S> map_coeffs(const Poly<R>& p, F f) {
  std::vector<S> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(f(c));
  return Poly<S>(std::move(out));
}

template <class R>
Poly<R> poly_pow(const Poly<R>& base, unsigned e) {
  Poly<R> r = Poly<R>::constant(Ring<R>::one());
  Poly<R> b = base;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

inline QPoly to_qpoly(const ZPoly& p) {
  return map_coeffs<Rational>(p, [](const BigInt& c) { return Rational(c); });
}

/// Throws InvariantViolation when a coefficient is not an integer.
ZPoly to_zpoly(const QPoly& p);

/// Substitute a value for m in every coefficient of a Q[m][X] polynomial.
QPoly specialize_m(const QmPoly& p, const Rational& m);

template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "X") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const R& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (Ring<R>::is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << Ring<R>::str(c) << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

inline std::string Ring<MPoly>::str(const MPoly& a) { return to_string(a, "m"); }

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& p) {
  return os << to_string(p);
}

}  // namespace simplest
