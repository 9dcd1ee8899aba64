#pragma once

// Exact arithmetic in Q[y]/Phi_N(y).
//
// Root-of-unity convention used throughout:
//   omega    = y^{N/3}           (a primitive cube root of unity)
//   eps6     = -omega            (a primitive sixth root of unity)
//   sqrt(-3) = -(2*omega + 1) = eps6 - eps6^5
// With this pairing r^(n)(omega) = -(-sqrt(-3))^{n-1} for every n >= 1 and
// the shifted sum sum_i (X - sqrt(-3))^{n-1-i} X^i equals -r^(n)(X - eps6).

#include <memory>
#include <optional>
#include <vector>

#include "simplest/poly.hpp"

namespace simplest {

ZPoly cyclotomic_polynomial(unsigned n);

class CycloRing {
 public:
  static std::shared_ptr<const CycloRing> make(unsigned conductor);

  unsigned conductor() const { return n_; }
  const QPoly& modulus() const { return phi_; }
  int degree() const { return phi_.degree(); }

 private:
  CycloRing(unsigned n, QPoly phi) : n_(n), phi_(std::move(phi)) {}

  unsigned n_;
  QPoly phi_;
};

using CycloRingPtr = std::shared_ptr<const CycloRing>;

class CycloElt {
 public:
  CycloElt(CycloRingPtr ring, QPoly rep);
  CycloElt(CycloRingPtr ring, const Rational& scalar);

  const CycloRingPtr& ring() const { return ring_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  CycloElt inverse() const;
  CycloElt pow(long e) const;

  friend CycloElt operator+(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator-(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator-(const CycloElt& a);
  friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator/(const CycloElt& a, const CycloElt& b) { return a * b.inverse(); }
  friend bool operator==(const CycloElt& a, const CycloElt& b);
  friend bool operator!=(const CycloElt& a, const CycloElt& b) { return !(a == b); }

 private:
  CycloRingPtr ring_;
  QPoly rep_;
};

/// zeta_d^k inside Q(zeta_N); requires d | N.
CycloElt embed_root(const CycloRingPtr& ring, unsigned d, long k);

/// Smallest e >= 1 with x^e == 1, or nullopt if none up to max_e.
std::optional<unsigned> multiplicative_order(const CycloElt& x, unsigned max_e);

CycloElt omega(const CycloRingPtr& ring);
CycloElt eps6(const CycloRingPtr& ring);
/// The fixed square root of -3; requires 3 | N.
CycloElt sqrt_minus3(const CycloRingPtr& ring);

/// Evaluate a rational polynomial at a ring element.
CycloElt evaluate(const QPoly& p, const CycloElt& x);
CycloElt evaluate(const ZPoly& p, const CycloElt& x);

/// alpha = eps6 (eps6 + eps_n) / (1 - eps_n) in Q(zeta_N), N = lcm(6, n).
CycloElt alpha_of(unsigned n);

struct Mat2 {
  CycloElt a, b, c, d;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  /// Nonzero scalar multiple of the identity.
  bool is_projective_identity() const;
};

/// M = [[alpha, -1], [1, alpha + 1]].
Mat2 moebius_matrix(const CycloElt& alpha);

struct MatrixOrder {
  std::optional<unsigned> order;  ///< nullopt: order exceeds the bound
  unsigned bound = 0;
};

MatrixOrder moebius_matrix_order(const CycloElt& alpha, unsigned max_k);

/// Compares sum_{i<n} (X - s)^{n-1-i} X^i with -r^(n)(X - eps6) coefficientwise.
bool check_R_shift(unsigned n);

}  // namespace simplest
