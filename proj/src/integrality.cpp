#include "simplest/integrality.hpp"

#include <algorithm>

#include "simplest/resultant.hpp"

namespace simplest {

const char* to_string(Gate g) { return g == Gate::Strict ? "strict" : "relaxed"; }
const char* to_string(Strategy s) { return s == Strategy::Enumerate ? "enumerate" : "radical"; }

std::vector<BigInt> newton_power_sums(const ZPoly& f, unsigned k_max) {
  if (f.degree() < 1 || f.lead() != 1) throw ArithmeticError("power sums need a monic polynomial");
  const unsigned n = static_cast<unsigned>(f.degree());
  std::vector<BigInt> s(k_max + 1);
  s[0] = n;
  for (unsigned k = 1; k <= k_max; ++k) {
    BigInt acc = 0;
    for (unsigned i = 1; i <= std::min(k - 1, n); ++i) acc += f.coeff(n - i) * s[k - i];
    if (k <= n) acc += BigInt(k) * f.coeff(n - k);
    s[k] = -acc;
  }
  return s;
}

void NumberField::init(const ZPoly& f) {
  if (f.degree() < 2) throw ArithmeticError("number field needs degree >= 2");
  if (f.lead() != 1) throw ArithmeticError("defining polynomial must be monic");
  f_ = f;
  n_ = static_cast<unsigned>(f.degree());
  disc_ = discriminant(f);
  if (disc_ == 0) throw ArithmeticError("defining polynomial is not separable");
  traces_ = newton_power_sums(f, 2 * n_ - 2);

  // beta^n = -(c_0 + ... + c_{n-1} beta^{n-1}); further powers by shifting.
  std::vector<BigInt> cur(n_);
  for (unsigned i = 0; i < n_; ++i) cur[i] = -f.coeff(i);
  reduction_.clear();
  reduction_.push_back(cur);
  for (unsigned k = 1; k + 1 < n_; ++k) {
    std::vector<BigInt> next(n_);
    const BigInt top = cur[n_ - 1];
    for (unsigned i = n_ - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    for (unsigned i = 0; i < n_; ++i) next[i] += top * reduction_[0][i];
    reduction_.push_back(next);
    cur = std::move(next);
  }
}

FieldPtr NumberField::certified(unsigned n, long t) {
  auto w = eisenstein_shift_check(n, t);
  if (!w)
    throw ParameterNotCovered("parameter not covered: no Eisenstein witness for n=" +
                              std::to_string(n) + ", t=" + std::to_string(t));
  std::shared_ptr<NumberField> k(new NumberField());
  k->init(specialize(n, t).poly);
  k->t_ = t;
  k->has_t_ = true;
  k->witness_ = w->prime;
  if (k->disc_ != specialized_discriminant_closed_form(n, t))
    throw InvariantViolation("discriminant differs from its closed form");
  return k;
}

FieldPtr NumberField::uncertified(unsigned n, long t) {
  std::shared_ptr<NumberField> k(new NumberField());
  k->init(specialize(n, t).poly);
  k->t_ = t;
  k->has_t_ = true;
  return k;
}

FieldPtr NumberField::from_monic(const ZPoly& f) {
  std::shared_ptr<NumberField> k(new NumberField());
  k->init(f);
  return k;
}

std::vector<BigInt> NumberField::mul_mod(const std::vector<BigInt>& a,
                                         const std::vector<BigInt>& b) const {
  std::vector<BigInt> prod(2 * n_ - 1);
  for (unsigned i = 0; i < n_ && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_ && j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  std::vector<BigInt> r(prod.begin(), prod.begin() + n_);
  for (unsigned k = 0; k + 1 < n_; ++k) {
    const BigInt& c = prod[n_ + k];
    if (c == 0) continue;
    for (unsigned i = 0; i < n_; ++i) r[i] += c * reduction_[k][i];
  }
  return r;
}

FieldElt FieldElt::make(FieldPtr field, std::vector<BigInt> num, BigInt den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  const unsigned n = field->degree();
  if (num.size() > n) throw ArithmeticError("coefficient vector longer than the degree");
  num.resize(n);
  if (den < 0) {
    den = -den;
    for (auto& c : num) c = -c;
  }
  BigInt g = den;
  for (const auto& c : num) g = gcd(g, c);
  if (g != 1)
    for (auto& c : num) c /= g;
  return FieldElt{std::move(field), std::move(num), den / g};
}

FieldElt FieldElt::beta(FieldPtr field) {
  std::vector<BigInt> v(field->degree());
  v[1] = 1;
  return make(std::move(field), std::move(v));
}

FieldElt FieldElt::one(FieldPtr field) {
  std::vector<BigInt> v(field->degree());
  v[0] = 1;
  return make(std::move(field), std::move(v));
}

FieldElt operator+(const FieldElt& a, const FieldElt& b) {
  const BigInt l = lcm(a.den, b.den);
  const BigInt sa = l / a.den, sb = l / b.den;
  std::vector<BigInt> r(a.num.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.num[i] * sa + b.num[i] * sb;
  return FieldElt::make(a.field, std::move(r), l);
}

FieldElt operator*(const FieldElt& a, const FieldElt& b) {
  return FieldElt::make(a.field, a.field->mul_mod(a.num, b.num), a.den * b.den);
}

QPoly char_poly(const FieldElt& e) {
  const unsigned n = e.field->degree();
  const ZPoly a(e.num);
  if (a.degree() <= 0) {
    const Rational c = make_rational(a.coeff(0), e.den);
    return poly_pow(QPoly{-c, Rational(1)}, n);
  }
  // v_y = Res_X(f, den*y - a(X)) for y = 0..n, then Newton interpolation.
  std::vector<Rational> dd(n + 1);
  for (unsigned y = 0; y <= n; ++y) {
    const ZPoly g = ZPoly::constant(e.den * y) - a;
    dd[y] = resultant(e.field->poly(), g);
  }
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned y = n; y >= k; --y) dd[y] = (dd[y] - dd[y - 1]) / Rational(k);
  QPoly p = QPoly::constant(dd[n]);
  for (unsigned k = n; k-- > 0;) p = p * QPoly{Rational(-static_cast<long>(k)), Rational(1)} + QPoly::constant(dd[k]);
  const Rational scale = 1 / Rational(ipow(e.den, n));
  p.scale(scale);
  if (p.degree() != static_cast<int>(n) || p.lead() != 1)
    throw InvariantViolation("characteristic polynomial is not monic of degree n");
  return p;
}

bool is_algebraic_integer(const FieldElt& e) {
  if (e.den == 1) return true;
  const QPoly cp = char_poly(e);
  for (const auto& c : cp.coeffs())
    if (!is_integral(c)) return false;
  return true;
}

Rational trace(const FieldElt& e) {
  const auto& s = e.field->power_traces();
  Rational acc = 0;
  for (std::size_t i = 0; i < e.num.size(); ++i) acc += e.num[i] * s[i];
  return acc / e.den;
}

bool is_eisenstein(const ZPoly& f, const BigInt& p) {
  if (f.degree() < 1) return false;
  if (mpz_divisible_p(f.lead().get_mpz_t(), p.get_mpz_t())) return false;
  for (int i = 0; i < f.degree(); ++i)
    if (!mpz_divisible_p(f.coeffs()[static_cast<std::size_t>(i)].get_mpz_t(), p.get_mpz_t()))
      return false;
  const BigInt p2 = p * p;
  return !mpz_divisible_p(f.coeff(0).get_mpz_t(), p2.get_mpz_t());
}

namespace {

ZPoly shifted_for_witness(unsigned n, long t) {
  const ZPoly f = specialize(n, t).poly;
  if (m_rule(n) == MRule::Identity) return taylor_shift(f, BigInt(t));
  // 3^n f((X + t)/3): the minimal polynomial of 3 beta - t.
  const QPoly sub{make_rational(t, 3), Rational(1, 3)};
  QPoly h = compose(to_qpoly(f), sub);
  h.scale(Rational(ipow(BigInt(3), n)));
  return to_zpoly(h);
}

}  // namespace

std::optional<EisensteinWitness> eisenstein_shift_check(unsigned n, long t) {
  if (n < 2) throw ArithmeticError("family fields need n >= 2");
  const BigInt q = q_of(n, t);
  std::optional<ZPoly> shifted;
  for (const auto& [p, e] : factor(q)) {
    if (p == 3 || e != 1) continue;
    if (!shifted) shifted = shifted_for_witness(n, t);
    if (is_eisenstein(*shifted, p)) return EisensteinWitness{p, *shifted};
  }
  return std::nullopt;
}

ParameterValidity valid_parameter(unsigned n, long t, Gate gate) {
  ParameterValidity v;
  v.q = q_of(n, t);
  const std::string qs = v.q.get_str();
  if (gate == Gate::Strict) {
    if (!is_squarefree(v.q)) {
      v.reason = "Q(t) = " + qs + " is not squarefree";
      return v;
    }
  } else if (!is_squarefree(three_free_part(v.q))) {
    v.reason = "the 3-free part of Q(t) = " + qs + " is not squarefree";
    return v;
  }
  auto w = eisenstein_shift_check(n, t);
  if (!w) {
    v.reason = "Q(t) = " + qs + " has no prime p != 3 with v_p(Q) = 1";
    return v;
  }
  v.valid = true;
  v.witness = w->prime;
  return v;
}

BigInt index_branch_bound(unsigned n) {
  if (n < 2) throw ArithmeticError("index bound is defined for n >= 2");
  const unsigned long e = n % 3 == 0 ? (n - 3ul) * (n - 4ul) / 2 : (n * n - 3ul * n + 4) / 2;
  return ipow(BigInt(3), e) * ipow(BigInt(n), n);
}

BigInt index_bound_Cn(unsigned n) { return largest_square_root_divisor(index_branch_bound(n)); }

BigInt period_bound(unsigned n) {
  if (n < 2) throw ArithmeticError("period bound is defined for n >= 2");
  // Exponent of p in 3^{n^3} n^{2n^2}, then floor(e / 4).
  BigInt r = 1;
  auto primes = factor(BigInt(3) * n);
  const unsigned long n2 = static_cast<unsigned long>(n) * n;
  for (const auto& pe : primes) {
    unsigned long e = 2 * n2 * static_cast<unsigned long>(p_adic_valuation(BigInt(n), pe.prime));
    if (pe.prime == 3) e += n2 * n;
    r *= ipow(pe.prime, e / 4);
  }
  return r;
}

Order Order::from_generators(FieldPtr field, const BigInt& den, const IntMatrix& gens) {
  if (den <= 0) throw ArithmeticError("order denominator must be positive");
  const unsigned n = field->degree();
  if (gens.cols() != n) throw ArithmeticError("generator width differs from the degree");
  IntMatrix h = hnf_lower(gens);
  if (h.rows() != n) throw ArithmeticError("generators do not span a full lattice");
  BigInt g = den;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g = gcd(g, h(i, j));
  if (g != 1)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) /= g;
  return Order{std::move(field), den / g, std::move(h)};
}

Order Order::equation_order(FieldPtr field) {
  const unsigned n = field->degree();
  return Order{std::move(field), 1, IntMatrix::identity(n)};
}

BigInt Order::index() const {
  BigInt det = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i) det *= basis(i, i);
  return Ring<BigInt>::exact_div(ipow(den, basis.rows()), det);
}

FieldElt Order::element(std::size_t i) const { return FieldElt::make(field, basis.row(i), den); }

BigInt order_discriminant(const Order& o) {
  const BigInt idx = o.index();
  return Ring<BigInt>::exact_div(o.field->poly_discriminant(), idx * idx);
}

Order join(const Order& a, const Order& b) {
  if (a.field != b.field && a.field->poly() != b.field->poly())
    throw ArithmeticError("joining orders of different fields");
  const BigInt l = lcm(a.den, b.den);
  const BigInt sa = l / a.den, sb = l / b.den;
  const std::size_t n = a.basis.rows();
  IntMatrix gens(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gens(i, j) = a.basis(i, j) * sa;
      gens(n + i, j) = b.basis(i, j) * sb;
    }
  return Order::from_generators(a.field, l, gens);
}

std::vector<BigInt> candidate_primes(unsigned n) {
  std::vector<BigInt> ps{3};
  for (const auto& pe : factor(BigInt(n))) ps.push_back(pe.prime);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

Order p_maximal_order(const FieldPtr& field, const BigInt& p, Strategy strategy) {
  return p_maximal_order(Order::equation_order(field), p, strategy);
}

Order integral_basis(const FieldPtr& field, Strategy strategy, Gate gate) {
  if (!field->has_parameter() || !field->witness())
    throw ParameterNotCovered("parameter not covered: field is not a certified family member");
  const unsigned n = field->degree();
  const long t = field->parameter();
  const auto v = valid_parameter(n, t, gate);
  if (!v.valid) throw ParameterNotCovered("parameter not covered: " + v.reason);
  Order acc = Order::equation_order(field);
  for (const auto& p : candidate_primes(n)) acc = join(acc, p_maximal_order(field, p, strategy));
  return acc;
}

}  // namespace simplest
