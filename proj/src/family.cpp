#include "simplest/family.hpp"

#include <sstream>

#include "simplest/cyclotomic.hpp"
#include "simplest/resultant.hpp"

namespace simplest {

namespace {

MPoly m_linear(long c0, long c1) { return MPoly{Rational(c0), Rational(c1)}; }

QmPoly lift(const ZPoly& p) {
  return map_coeffs<MPoly>(p, [](const BigInt& c) { return MPoly::constant(Rational(c)); });
}

template <class P>
std::string describe_mismatch(const P& lhs, const P& rhs) {
  std::ostringstream os;
  os << "lhs = " << to_string(lhs) << ", rhs = " << to_string(rhs);
  return os.str();
}

Rational sign_power(long e) { return (e & 1) ? Rational(-1) : Rational(1); }

}  // namespace

MPoly g_value(unsigned i) {
  switch (i % 6) {
    case 0: return m_linear(1, 0);
    case 1: return m_linear(0, -1);
    case 2: return m_linear(-1, -1);
    case 3: return m_linear(-1, 0);
    case 4: return m_linear(0, 1);
    default: return m_linear(1, 1);
  }
}

long h_value(unsigned i) {
  static constexpr long table[6] = {0, -1, -1, 0, 1, 1};
  return table[i % 6];
}

FamilyPoly build_f(unsigned n) {
  std::vector<MPoly> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) c[i] = Rational(binomial(n, i)) * g_value(n - i);
  return {n, FamilyKind::F, QmPoly(std::move(c))};
}

ZPoly r_poly(unsigned n) {
  std::vector<BigInt> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) c[i] = binomial(n, i) * h_value(n - i);
  return ZPoly(std::move(c));
}

FamilyPoly build_r(unsigned n) { return {n, FamilyKind::R, lift(r_poly(n))}; }

QPoly f_at(unsigned n, const Rational& m) { return specialize_m(build_f(n).poly, m); }

Rational norm_form(const Rational& m) { return m * m + m + 1; }

MPoly norm_form_poly() { return MPoly{Rational(1), Rational(1), Rational(1)}; }

MRule m_rule(unsigned n) { return n % 3 == 0 ? MRule::Third : MRule::Identity; }

Rational m_of(unsigned n, long t) {
  return m_rule(n) == MRule::Third ? make_rational(t, 3) : Rational(t);
}

SpecializedPoly specialize(unsigned n, long t) {
  if (n < 2) throw ArithmeticError("specialization is defined for n >= 2");
  QPoly q = f_at(n, m_of(n, t));
  return {n, t, m_rule(n), to_zpoly(q)};
}

BigInt q_of(unsigned n, long t) {
  BigInt tt = t;
  return n % 3 == 0 ? BigInt(tt * tt + 3 * tt + 9) : BigInt(tt * tt + tt + 1);
}

bool CheckReport::passed() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::optional<CheckItem> CheckReport::first_failure() const {
  for (const auto& it : items)
    if (!it.pass) return it;
  return std::nullopt;
}

void CheckReport::add(std::string name, unsigned n, bool pass, std::string detail) {
  items.push_back({std::move(name), n, pass, std::move(detail)});
}

void CheckReport::append(const CheckReport& other) {
  items.insert(items.end(), other.items.begin(), other.items.end());
}

CheckReport check_recursions(unsigned n_max) {
  CheckReport report;
  const QmPoly x_minus_m{m_linear(0, -1), m_linear(1, 0)};
  const QmPoly x_plus_m_plus_1{m_linear(1, 1), m_linear(1, 0)};
  const MPoly nf = norm_form_poly();
  const ZPoly minus_x_minus_1{BigInt(-1), BigInt(-1)};

  for (unsigned n = 0; n <= n_max; ++n) {
    const QmPoly fn = build_f(n).poly, fn1 = build_f(n + 1).poly;
    const QmPoly rn = build_r(n).poly, rn1 = build_r(n + 1).poly;

    QmPoly rhs1 = x_minus_m * fn + nf * rn;
    report.add("recursion_f", n, rhs1 == fn1, rhs1 == fn1 ? "" : describe_mismatch(fn1, rhs1));

    QmPoly rhs2 = x_plus_m_plus_1 * rn - fn;
    report.add("recursion_r", n, rhs2 == rn1, rhs2 == rn1 ? "" : describe_mismatch(rn1, rhs2));

    const MPoly k = MPoly::constant(Rational(n + 1));
    QmPoly df = derivative(fn1), dr = derivative(rn1);
    report.add("derivative_f", n, df == k * fn);
    report.add("derivative_r", n, dr == k * rn);

    if (n >= 1) {
      const ZPoly r = r_poly(n);
      ZPoly reflected = compose(r, minus_x_minus_1);
      if ((n - 1) & 1) reflected = -reflected;
      report.add("reflection_r", n, reflected == r);
    }
  }
  return report;
}

CheckReport check_recursion_reproduces_definition(unsigned n_max) {
  CheckReport report;
  const QmPoly x_minus_m{m_linear(0, -1), m_linear(1, 0)};
  const QmPoly x_plus_m_plus_1{m_linear(1, 1), m_linear(1, 0)};
  const MPoly nf = norm_form_poly();
  QmPoly f = QmPoly::constant(MPoly::constant(1));
  QmPoly r;
  for (unsigned n = 1; n <= n_max; ++n) {
    QmPoly f_next = x_minus_m * f + nf * r;
    QmPoly r_next = x_plus_m_plus_1 * r - f;
    f = std::move(f_next);
    r = std::move(r_next);
    report.add("recursive_f_matches_definition", n, f == build_f(n).poly);
    report.add("recursive_r_matches_definition", n, r == build_r(n).poly);
  }
  return report;
}

QPoly transform_lhs(unsigned n, const Rational& m, const Rational& alpha) {
  // (X + a + 1)^n f((aX - 1)/(X + a + 1)) = sum_i c_i (aX - 1)^i (X + a + 1)^{n-i}
  const QPoly f = f_at(n, m);
  const QPoly num{Rational(-1), alpha};
  const QPoly den{alpha + 1, Rational(1)};
  QPoly acc;
  for (unsigned i = 0; i <= n; ++i) {
    const Rational c = f.coeff(i);
    if (c == 0) continue;
    acc += c * (poly_pow(num, i) * poly_pow(den, n - i));
  }
  return acc;
}

QPoly transform_rhs(unsigned n, const Rational& m, const Rational& alpha) {
  const QPoly f = f_at(n, m);
  const QPoly r = to_qpoly(r_poly(n));
  const Rational fa = evaluate(f, alpha);
  const Rational ra = evaluate(r, alpha);
  return fa * f - (norm_form(m) * ra) * r;
}

CheckReport check_transform_pairs(unsigned n,
                                  const std::vector<std::pair<Rational, Rational>>& pairs) {
  CheckReport report;
  for (const auto& [m, a] : pairs) {
    QPoly lhs = transform_lhs(n, m, a), rhs = transform_rhs(n, m, a);
    const bool ok = lhs == rhs;
    report.add("transform_identity", n, ok,
               ok ? "" : "m=" + to_string(m) + " alpha=" + to_string(a) + ": " + describe_mismatch(lhs, rhs));
  }
  return report;
}

CheckReport check_transform_identity(unsigned n, const std::vector<Rational>& m_samples,
                                     const std::vector<Rational>& alpha_samples) {
  std::vector<std::pair<Rational, Rational>> grid;
  grid.reserve(m_samples.size() * alpha_samples.size());
  for (const auto& m : m_samples)
    for (const auto& a : alpha_samples) grid.emplace_back(m, a);
  return check_transform_pairs(n, grid);
}

Rational multisection_t(unsigned n, const Rational& a, const Rational& b, const Rational& c) {
  const Rational p[6] = {a, b, c, -a, -b, -c};
  Rational sum = 0;
  for (unsigned i = 0; i <= n; ++i) sum += Rational(binomial(n, i)) * p[i % 6];
  return sum;
}

CheckReport check_r_at_omega(unsigned n_max) {
  CheckReport report;
  auto ring = CycloRing::make(6);
  const CycloElt w = omega(ring);
  const CycloElt minus_s = -sqrt_minus3(ring);
  CycloElt power(ring, Rational(1));  // (-s)^{n-1}
  for (unsigned n = 1; n <= n_max; ++n) {
    const CycloElt lhs = evaluate(r_poly(n), w);
    const CycloElt rhs = -power;
    report.add("r_at_omega", n, lhs == rhs,
               lhs == rhs ? "" : describe_mismatch(lhs.rep(), rhs.rep()));
    power = power * minus_s;
  }
  return report;
}

QuadraticRemainderPeriod remainder_mod_quadratic_period(unsigned n) {
  const QPoly quad{Rational(1), Rational(1), Rational(1)};
  QuadraticRemainderPeriod out;
  out.remainder = divrem(to_qpoly(r_poly(n)), quad).remainder;
  out.shifted_remainder = divrem(to_qpoly(r_poly(n + 12)), quad).remainder;
  out.holds = out.shifted_remainder == Rational(729) * out.remainder;
  return out;
}

CheckReport check_rn_quadratic_resultant(unsigned n_max) {
  CheckReport report;
  const ZPoly quad{BigInt(1), BigInt(1), BigInt(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    const BigInt expected = ipow(BigInt(3), n - 1);
    const BigInt got = resultant(r_poly(n), quad);
    const BigInt swapped = resultant(quad, r_poly(n));
    report.add("res_rn_quadratic", n, got == expected && swapped == expected,
               "res=" + to_string(got) + " expected=" + to_string(expected));
  }
  return report;
}

CheckReport check_resultant_laws(unsigned n, const std::vector<Rational>& m_samples) {
  CheckReport report;
  const QPoly r = to_qpoly(r_poly(n));
  const long nn = static_cast<long>(n);
  for (const auto& m : m_samples) {
    const QPoly f = f_at(n, m);
    const Rational rf = resultant(r, f);
    const Rational rf_expected =
        Rational(ipow(BigInt(3), static_cast<unsigned long>(nn * (nn - 1) / 2))) *
        sign_power(nn * (nn + 1) / 2);
    report.add("res_r_f", n, rf == rf_expected,
               "m=" + to_string(m) + " res=" + to_string(rf) + " expected=" + to_string(rf_expected));
    if (n >= 2) {
      const Rational ff = resultant(f, f_at(n - 1, m));
      const Rational ff_expected =
          ipow(norm_form(m), nn - 1) *
          Rational(ipow(BigInt(3), static_cast<unsigned long>((nn - 1) * (nn - 2) / 2))) *
          sign_power(nn * (nn - 1) / 2);
      report.add("res_f_fprev", n, ff == ff_expected,
                 "m=" + to_string(m) + " res=" + to_string(ff) + " expected=" + to_string(ff_expected));
    }
  }
  return report;
}

CheckReport check_symbolic_coprime(unsigned n_max) {
  CheckReport report;
  for (unsigned n = 1; n <= n_max; ++n) {
    const MPoly res = resultant(build_r(n).poly, build_f(n).poly);
    const long nn = static_cast<long>(n);
    const Rational expected =
        Rational(ipow(BigInt(3), static_cast<unsigned long>(nn * (nn - 1) / 2))) *
        sign_power(nn * (nn + 1) / 2);
    const bool ok = res == MPoly::constant(expected);
    report.add("symbolic_res_r_f", n, ok, "res=" + to_string(res, "m"));
  }
  return report;
}

Rational discriminant_closed_form(unsigned n, const Rational& m) {
  const long nn = static_cast<long>(n);
  return Rational(ipow(BigInt(3), static_cast<unsigned long>((nn - 1) * (nn - 2) / 2))) *
         Rational(ipow(BigInt(nn), n)) * ipow(norm_form(m), nn - 1);
}

BigInt specialized_discriminant_closed_form(unsigned n, long t) {
  const long nn = static_cast<long>(n);
  const long e3 = (n % 3 == 0) ? (nn - 1) * (nn - 6) / 2 : (nn - 1) * (nn - 2) / 2;
  Rational v = ipow(Rational(3), e3) * Rational(ipow(BigInt(nn), n)) *
               Rational(ipow(q_of(n, t), n - 1));
  if (!is_integral(v)) throw InvariantViolation("specialized discriminant is not an integer");
  return v.get_num();
}

CheckReport check_discriminants(unsigned n, const std::vector<Rational>& m_samples,
                                const std::vector<long>& t_samples) {
  CheckReport report;
  for (const auto& m : m_samples) {
    const Rational d = discriminant(f_at(n, m));
    const Rational e = discriminant_closed_form(n, m);
    report.add("discriminant_m", n, d == e, "m=" + to_string(m));
  }
  for (long t : t_samples) {
    const BigInt d = discriminant(specialize(n, t).poly);
    const BigInt e = specialized_discriminant_closed_form(n, t);
    report.add("discriminant_t", n, d == e, "t=" + std::to_string(t));
  }
  return report;
}

ZPoly to_zpoly(const QPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.size());
  for (const auto& q : p.coeffs()) {
    if (!is_integral(q)) throw InvariantViolation("non-integer coefficient " + q.get_str());
    c.emplace_back(q.get_num());
  }
  return ZPoly(std::move(c));
}

QPoly specialize_m(const QmPoly& p, const Rational& m) {
  return map_coeffs<Rational>(p, [&](const MPoly& c) { return evaluate(c, m); });
}

}  // namespace simplest
