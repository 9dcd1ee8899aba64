#pragma once

// Exact scalars and the integer utilities used across the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplest {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is applied outside its mathematical domain
/// (valuation of zero, division by a non-unit, singular matrix, ...).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal invariant does not hold. Never expected to fire.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

struct FactorOptions {
  /// Trial division runs up to this bound; larger cofactors go to Pollard rho.
  std::uint64_t trial_bound = 1'000'000;
};

/// v_p(x) for x != 0. Negative results are possible for rationals.
long p_adic_valuation(const BigInt& x, const BigInt& p);
long p_adic_valuation(const Rational& x, const BigInt& p);

bool is_prime(const BigInt& n);

/// Prime factorization of |n| with ascending primes. n must be nonzero;
/// factor(±1) is empty.
Factorization factor(const BigInt& n, const FactorOptions& options = {});

bool is_squarefree(const BigInt& n, const FactorOptions& options = {});

/// n / 3^{v_3(n)}.
BigInt three_free_part(const BigInt& n);

/// Greatest C >= 1 with C^k | n, for n >= 1.
BigInt largest_root_divisor(const BigInt& n, unsigned k);

/// Greatest C >= 1 with C^2 | n, for n >= 1.
BigInt largest_square_root_divisor(const BigInt& n);

BigInt ipow(const BigInt& base, unsigned long exponent);
Rational ipow(const Rational& base, long exponent);
BigInt binomial(unsigned long n, unsigned long k);

/// Rational with value num/den, canonicalized.
Rational make_rational(const BigInt& num, const BigInt& den);

/// True when the rational has denominator 1.
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

}  // namespace simplest
