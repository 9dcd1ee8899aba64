#pragma once

// Algebraic-integer tests, Eisenstein certification, index bounds and
// integral bases of Q(beta_t), beta_t a root of f^(n)_t.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplest/family.hpp"
#include "simplest/matrix.hpp"
#include "simplest/poly.hpp"

namespace simplest {

/// Thrown for parameters outside the certified domain (no Eisenstein
/// witness, or the squarefree gate fails).
class ParameterNotCovered : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Gate { Strict, Relaxed };
enum class Strategy { Enumerate, Radical };

const char* to_string(Gate g);
const char* to_string(Strategy s);

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[X]/(f) for a monic separable integer f. Fields built from a family
/// parameter carry the Eisenstein witness that certifies irreducibility.
class NumberField {
 public:
  /// f^(n)_t with an Eisenstein witness; throws ParameterNotCovered otherwise.
  static FieldPtr certified(unsigned n, long t);
  /// f^(n)_t without the irreducibility certificate; f must be separable.
  static FieldPtr uncertified(unsigned n, long t);
  /// Arbitrary monic separable integer polynomial of degree >= 2.
  static FieldPtr from_monic(const ZPoly& f);

  unsigned degree() const { return n_; }
  long parameter() const { return t_; }
  bool has_parameter() const { return has_t_; }
  const ZPoly& poly() const { return f_; }
  const BigInt& poly_discriminant() const { return disc_; }
  const std::optional<BigInt>& witness() const { return witness_; }

  /// Tr(beta^k) for 0 <= k <= 2n - 2.
  const std::vector<BigInt>& power_traces() const { return traces_; }

  /// Product of two integer coefficient vectors modulo f.
  std::vector<BigInt> mul_mod(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const;

 private:
  NumberField() = default;
  void init(const ZPoly& f);

  unsigned n_ = 0;
  long t_ = 0;
  bool has_t_ = false;
  ZPoly f_;
  BigInt disc_;
  std::optional<BigInt> witness_;
  std::vector<BigInt> traces_;
  std::vector<std::vector<BigInt>> reduction_;  // beta^{n+k} in the power basis
};

/// Power sums Tr(beta^k), k = 0..k_max, of a monic polynomial (Newton).
std::vector<BigInt> newton_power_sums(const ZPoly& f, unsigned k_max);

/// (a_0 + a_1 beta + ... + a_{n-1} beta^{n-1}) / den, with gcd(content, den) = 1.
struct FieldElt {
  FieldPtr field;
  std::vector<BigInt> num;
  BigInt den = 1;

  static FieldElt make(FieldPtr field, std::vector<BigInt> num, BigInt den = 1);
  static FieldElt beta(FieldPtr field);
  static FieldElt one(FieldPtr field);

  friend FieldElt operator+(const FieldElt& a, const FieldElt& b);
  friend FieldElt operator*(const FieldElt& a, const FieldElt& b);
  friend bool operator==(const FieldElt& a, const FieldElt& b) {
    return a.num == b.num && a.den == b.den;
  }
};

/// Monic characteristic polynomial of e, computed as
/// Res_X(f(X), den Y - num(X)) / den^n by interpolation in Y.
QPoly char_poly(const FieldElt& e);
bool is_algebraic_integer(const FieldElt& e);
Rational trace(const FieldElt& e);

struct EisensteinWitness {
  BigInt prime;
  /// f(X + t) for n = 1, 2 mod 3; the minimal polynomial of 3 beta - t otherwise.
  ZPoly shifted;
};

bool is_eisenstein(const ZPoly& f, const BigInt& p);

/// Smallest prime p != 3 with v_p(Q(t)) = 1, verified Eisenstein on the
/// shifted polynomial; nullopt when the sufficient condition fails.
std::optional<EisensteinWitness> eisenstein_shift_check(unsigned n, long t);

struct ParameterValidity {
  bool valid = false;
  std::string reason;
  BigInt q;
  std::optional<BigInt> witness;
};

/// Squarefree gate on Q(t) followed by the Eisenstein witness requirement.
ParameterValidity valid_parameter(unsigned n, long t, Gate gate);

/// 3^e n^n with e = (n^2 - 3n + 4)/2 or (n^2 - 7n + 12)/2; the divisibility
/// bound for the squared index.
BigInt index_branch_bound(unsigned n);
/// Greatest C with C^2 dividing index_branch_bound(n).
BigInt index_bound_Cn(unsigned n);
/// Greatest n0 with n0^2 | (3^{n^2/2} n^n)^n, i.e. n0^4 | 3^{n^3} n^{2n^2}.
BigInt period_bound(unsigned n);

/// Order as (den, H): rows of H / den are a Z-basis, H in hnf_lower form.
struct Order {
  FieldPtr field;
  BigInt den = 1;
  IntMatrix basis;

  /// Canonicalizes arbitrary generating rows over a common denominator.
  static Order from_generators(FieldPtr field, const BigInt& den, const IntMatrix& gens);
  static Order equation_order(FieldPtr field);

  /// [O : Z[beta]] = den^n / det(H).
  BigInt index() const;
  FieldElt element(std::size_t i) const;
  bool same_lattice(const Order& other) const { return den == other.den && basis == other.basis; }
};

/// disc(f) / index^2.
BigInt order_discriminant(const Order& o);

/// Sum of two lattices in the same field.
Order join(const Order& a, const Order& b);

/// Smallest p-maximal order containing `start` (default Z[beta]) whose
/// index over `start` is a power of p.
Order p_maximal_order(const FieldPtr& field, const BigInt& p, Strategy strategy);
Order p_maximal_order(const Order& start, const BigInt& p, Strategy strategy);

/// Primes where the index can be divisible under the squarefree hypothesis:
/// {3} together with the prime divisors of n.
std::vector<BigInt> candidate_primes(unsigned n);

/// The maximal order of a certified family field. Throws ParameterNotCovered
/// when the field lacks a witness or Q(t) fails the gate.
Order integral_basis(const FieldPtr& field, Strategy strategy = Strategy::Radical,
                     Gate gate = Gate::Strict);

}  // namespace simplest
