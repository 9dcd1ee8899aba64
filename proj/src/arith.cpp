#include "simplest/arith.hpp"

#include <algorithm>
#include <map>

namespace simplest {

long p_adic_valuation(const BigInt& x, const BigInt& p) {
  if (x == 0) throw ArithmeticError("valuation of zero undefined");
  if (p < 2) throw ArithmeticError("valuation base must be a prime");
  BigInt r = x;
  long v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long p_adic_valuation(const Rational& x, const BigInt& p) {
  if (x == 0) throw ArithmeticError("valuation of zero undefined");
  long v = p_adic_valuation(BigInt(x.get_num()), p);
  return v - p_adic_valuation(BigInt(x.get_den()), p);
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's variant of Pollard rho. n is odd, composite, and not a prime power
// of a small prime; returns a nontrivial divisor.
BigInt pollard_rho(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys, tmp;
    unsigned long r = 1, m = 128;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          tmp = abs(x - y);
          q = (q * tmp) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        tmp = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt root;
  for (unsigned k = 2; k <= 4; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<BigInt, unsigned> sub;
      split(root, sub);
      for (const auto& [p, e] : sub) out[p] += e * k;
      return;
    }
  }
  BigInt d = pollard_rho(n);
  split(d, out);
  split(BigInt(n / d), out);
}

}  // namespace

Factorization factor(const BigInt& n, const FactorOptions& options) {
  if (n == 0) throw ArithmeticError("cannot factor zero");
  BigInt r = abs(n);
  std::map<BigInt, unsigned> found;
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), p)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[BigInt(p)] = e;
  };
  strip(2);
  for (std::uint64_t p = 3; p <= options.trial_bound; p += 2) {
    if (BigInt(p) * p > r) break;
    strip(static_cast<unsigned long>(p));
  }
  if (r > 1) split(r, found);

  Factorization result;
  result.reserve(found.size());
  for (const auto& [p, e] : found) result.push_back({p, e});
  return result;
}

bool is_squarefree(const BigInt& n, const FactorOptions& options) {
  if (n == 0) throw ArithmeticError("squarefree test of zero undefined");
  for (const auto& pe : factor(n, options))
    if (pe.exponent > 1) return false;
  return true;
}

BigInt three_free_part(const BigInt& n) {
  if (n == 0) throw ArithmeticError("3-free part of zero undefined");
  BigInt r = n;
  while (mpz_divisible_ui_p(r.get_mpz_t(), 3)) mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 3);
  return r;
}

BigInt largest_root_divisor(const BigInt& n, unsigned k) {
  if (n <= 0) throw ArithmeticError("largest root divisor needs a positive argument");
  if (k == 0) throw ArithmeticError("root index must be positive");
  BigInt c = 1;
  for (const auto& [p, e] : factor(n)) c *= ipow(p, e / k);
  return c;
}

BigInt largest_square_root_divisor(const BigInt& n) { return largest_root_divisor(n, 2); }

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational ipow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw ArithmeticError("zero to a negative power");
    Rational inv = 1 / base;
    return ipow(inv, -exponent);
  }
  Rational r(ipow(BigInt(base.get_num()), static_cast<unsigned long>(exponent)),
             ipow(BigInt(base.get_den()), static_cast<unsigned long>(exponent)));
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace simplest
