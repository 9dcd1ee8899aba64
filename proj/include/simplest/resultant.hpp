#pragma once

// Resultants and discriminants by the subresultant PRS.
//
// Convention: res(A, B) = lc(A)^{deg B} * prod_{A(a)=0} B(a), so that
// res(X - m, -1) = -1 and res(-1, X - m) = -1.

#include "simplest/poly.hpp"

namespace simplest {

/// Works over any integral domain with exact division (Z, Q, Q[m]).
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  if (a.is_zero() || b.is_zero()) throw ArithmeticError("resultant of zero polynomial");
  using K = Ring<R>;
  auto rpow = [](const R& base, int e) {
    R r = K::one();
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };

  R sign = K::one();
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
  }
  if (b.degree() == 0) return sign * rpow(b.lead(), a.degree());

  R g = K::one();
  R h = K::one();
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    Poly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return K::zero();
    a = std::move(b);
    R divisor = g * rpow(h, delta);
    b = map_coeffs<R>(r, [&](const R& c) { return K::exact_div(c, divisor); });
    g = a.lead();
    if (delta > 0) h = K::exact_div(rpow(g, delta), rpow(h, delta - 1));
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  R tail = K::exact_div(rpow(b.lead(), da), rpow(h, da - 1));
  return sign * tail;
}

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f).
template <class R>
R discriminant(const Poly<R>& f) {
  const int n = f.degree();
  if (n < 2) throw ArithmeticError("discriminant needs degree >= 2");
  R r = resultant(f, derivative(f));
  r = Ring<R>::exact_div(r, f.lead());
  if (((n * (n - 1)) / 2) & 1) r = -r;
  return r;
}

}  // namespace simplest
