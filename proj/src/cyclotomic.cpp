#include "simplest/cyclotomic.hpp"

#include <numeric>

#include "simplest/family.hpp"

namespace simplest {

ZPoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw ArithmeticError("cyclotomic polynomial index must be positive");
  // y^n - 1 divided by Phi_d for every proper divisor d.
  ZPoly acc = ZPoly::monomial(1, n) - ZPoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    auto qr = divrem(acc, cyclotomic_polynomial(d));
    if (!qr.remainder.is_zero()) throw InvariantViolation("cyclotomic division left a remainder");
    acc = qr.quotient;
  }
  return acc;
}

std::shared_ptr<const CycloRing> CycloRing::make(unsigned conductor) {
  return std::shared_ptr<const CycloRing>(
      new CycloRing(conductor, to_qpoly(cyclotomic_polynomial(conductor))));
}

namespace {

QPoly reduce(const QPoly& p, const QPoly& mod) {
  if (p.degree() < mod.degree()) return p;
  return divrem(p, mod).remainder;
}

void require_same_ring(const CycloElt& a, const CycloElt& b) {
  if (a.ring() != b.ring() && a.ring()->conductor() != b.ring()->conductor())
    throw ArithmeticError("cyclotomic elements from different rings");
}

}  // namespace

CycloElt::CycloElt(CycloRingPtr ring, QPoly rep) : ring_(std::move(ring)) {
  rep_ = reduce(rep, ring_->modulus());
}

CycloElt::CycloElt(CycloRingPtr ring, const Rational& scalar)
    : ring_(std::move(ring)), rep_(QPoly::constant(scalar)) {}

CycloElt operator+(const CycloElt& a, const CycloElt& b) {
  require_same_ring(a, b);
  return CycloElt(a.ring_, a.rep_ + b.rep_);
}

CycloElt operator-(const CycloElt& a, const CycloElt& b) {
  require_same_ring(a, b);
  return CycloElt(a.ring_, a.rep_ - b.rep_);
}

CycloElt operator-(const CycloElt& a) { return CycloElt(a.ring_, -a.rep_); }

CycloElt operator*(const CycloElt& a, const CycloElt& b) {
  require_same_ring(a, b);
  return CycloElt(a.ring_, a.rep_ * b.rep_);
}

bool operator==(const CycloElt& a, const CycloElt& b) {
  require_same_ring(a, b);
  return a.rep_ == b.rep_;
}

CycloElt CycloElt::inverse() const {
  if (is_zero()) throw ArithmeticError("inverting zero");
  // Extended Euclid: track s with s * rep == r (mod phi).
  QPoly r0 = ring_->modulus(), r1 = rep_;
  QPoly s0, s1 = QPoly::constant(1);
  while (r1.degree() > 0) {
    auto qr = divrem(r0, r1);
    QPoly s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) throw ArithmeticError("element is a zero divisor");
  Rational c = 1 / r1.lead();
  return CycloElt(ring_, s1 * c);
}

CycloElt CycloElt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElt result(ring_, Rational(1));
  CycloElt base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

CycloElt embed_root(const CycloRingPtr& ring, unsigned d, long k) {
  const unsigned n = ring->conductor();
  if (d == 0 || n % d) throw ArithmeticError("root order must divide the conductor");
  long kk = k % static_cast<long>(d);
  if (kk < 0) kk += d;
  if (std::gcd(static_cast<unsigned long>(kk), static_cast<unsigned long>(d)) != 1)
    throw ArithmeticError("exponent must be coprime to the root order");
  const std::size_t e = static_cast<std::size_t>(kk) * (n / d);
  return CycloElt(ring, QPoly::monomial(Rational(1), e));
}

std::optional<unsigned> multiplicative_order(const CycloElt& x, unsigned max_e) {
  const CycloElt one(x.ring(), Rational(1));
  CycloElt acc = x;
  for (unsigned e = 1; e <= max_e; ++e) {
    if (acc == one) return e;
    acc = acc * x;
  }
  return std::nullopt;
}

CycloElt omega(const CycloRingPtr& ring) { return embed_root(ring, 3, 1); }

CycloElt eps6(const CycloRingPtr& ring) { return -omega(ring); }

CycloElt sqrt_minus3(const CycloRingPtr& ring) {
  if (ring->conductor() % 3) throw ArithmeticError("sqrt(-3) needs 3 | N");
  const CycloElt w = omega(ring);
  return -(w + w + CycloElt(ring, Rational(1)));
}

CycloElt evaluate(const QPoly& p, const CycloElt& x) {
  const auto& ring = x.ring();
  return simplest::evaluate(p, x, [&](const Rational& c) { return CycloElt(ring, c); });
}

CycloElt evaluate(const ZPoly& p, const CycloElt& x) { return evaluate(to_qpoly(p), x); }

CycloElt alpha_of(unsigned n) {
  if (n < 2) throw ArithmeticError("alpha is defined for n >= 2");
  const unsigned conductor = std::lcm(6u, n);
  auto ring = CycloRing::make(conductor);
  const CycloElt e6 = eps6(ring);
  const CycloElt en = embed_root(ring, n, 1);
  const CycloElt one(ring, Rational(1));
  return e6 * (e6 + en) / (one - en);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

bool Mat2::is_projective_identity() const { return b.is_zero() && c.is_zero() && a == d && !a.is_zero(); }

Mat2 moebius_matrix(const CycloElt& alpha) {
  const auto& ring = alpha.ring();
  const CycloElt one(ring, Rational(1));
  return {alpha, -one, one, alpha + one};
}

MatrixOrder moebius_matrix_order(const CycloElt& alpha, unsigned max_k) {
  if (max_k < 1) throw ArithmeticError("order bound must be positive");
  const Mat2 m = moebius_matrix(alpha);
  Mat2 acc = m;
  for (unsigned k = 1; k <= max_k; ++k) {
    if (acc.is_projective_identity()) return {k, max_k};
    acc = acc * m;
  }
  return {std::nullopt, max_k};
}

namespace {

using CycloPoly = std::vector<CycloElt>;  // index i = coefficient of X^i

CycloPoly cp_mul(const CycloPoly& a, const CycloPoly& b, const CycloRingPtr& ring) {
  CycloPoly r(a.size() + b.size() - 1, CycloElt(ring, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

CycloPoly cp_add(CycloPoly a, const CycloPoly& b, const CycloRingPtr& ring) {
  if (b.size() > a.size()) a.resize(b.size(), CycloElt(ring, Rational(0)));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  return a;
}

}  // namespace

bool check_R_shift(unsigned n) {
  if (n < 2) throw ArithmeticError("R-shift identity is stated for n >= 2");
  auto ring = CycloRing::make(std::lcm(6u, n));
  const CycloElt zero(ring, Rational(0)), one(ring, Rational(1));
  const CycloElt s = sqrt_minus3(ring);
  const CycloElt e6 = eps6(ring);

  // Left side: sum_{i=0}^{n-1} (X - s)^{n-1-i} X^i.
  const CycloPoly x_minus_s{-s, one};
  CycloPoly lhs{zero};
  for (unsigned i = 0; i < n; ++i) {
    CycloPoly term{one};
    for (unsigned k = 0; k + 1 + i < n; ++k) term = cp_mul(term, x_minus_s, ring);
    CycloPoly xi(i + 1, zero);
    xi[i] = one;
    lhs = cp_add(lhs, cp_mul(term, xi, ring), ring);
  }

  // Right side: -r^(n)(X - eps6) by Horner in the variable X.
  const ZPoly r = r_poly(n);
  const CycloPoly x_minus_e6{-e6, one};
  CycloPoly rhs{zero};
  for (int i = r.degree(); i >= 0; --i) {
    rhs = cp_mul(rhs, x_minus_e6, ring);
    rhs[0] = rhs[0] + CycloElt(ring, Rational(r.coeffs()[static_cast<std::size_t>(i)]));
  }
  for (auto& c : rhs) c = -c;

  const std::size_t len = std::max(lhs.size(), rhs.size());
  lhs.resize(len, zero);
  rhs.resize(len, zero);
  return lhs == rhs;
}

}  // namespace simplest
