// simplest-fields: command-line front end for the family, integrality and
// periodicity computations. Output is JSON (schema "simplest-fields/1").

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplest/cyclotomic.hpp"
#include "simplest/family.hpp"
#include "simplest/integrality.hpp"
#include "simplest/kernels.hpp"
#include "simplest/periodicity.hpp"
#include "simplest/resultant.hpp"

using json = nlohmann::json;
using namespace simplest;

namespace {

constexpr const char* kSchema = "simplest-fields/1";

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kNotCovered = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json big(const BigInt& x) { return x.get_str(); }

json rat(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json int_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(big(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json rat_matrix(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(rat(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json zpoly(const ZPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(big(c));
  return a;
}

/// Integers as strings when every coefficient is integral, rationals otherwise.
json qpoly(const QPoly& p) {
  bool integral = true;
  for (const auto& c : p.coeffs()) integral = integral && is_integral(c);
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(integral ? big(c.get_num()) : rat(c));
  return a;
}

json mpoly_coeffs(const QmPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) {
    json in_m = json::array();
    for (const auto& x : c.coeffs()) in_m.push_back(rat(x));
    a.push_back({{"m_coeffs", in_m}, {"text", to_string(c, "m")}});
  }
  return a;
}

json items_json(const CheckReport& rep) {
  json a = json::array();
  for (const auto& it : rep.items) {
    json o{{"name", it.name}, {"n", it.n}, {"pass", it.pass}};
    if (!it.detail.empty()) o["detail"] = it.detail;
    a.push_back(o);
  }
  return a;
}

Gate parse_gate(const std::string& s) { return s == "relaxed" ? Gate::Relaxed : Gate::Strict; }
Strategy parse_strategy(const std::string& s) {
  return s == "enumerate" ? Strategy::Enumerate : Strategy::Radical;
}

void require_field_degree(unsigned n) {
  if (n < 2) throw UsageError("--n must be at least 2 for field commands");
}

struct Result {
  json payload;
  int code = kOk;
  std::string status = "ok";
};

// ---- family ---------------------------------------------------------------

struct FamilyArgs {
  unsigned n = 0;
  std::optional<long> t;
  bool symbolic = false;
};

Result cmd_family(const FamilyArgs& a) {
  Result r;
  r.payload["n"] = a.n;
  r.payload["r"] = zpoly(r_poly(a.n));
  if (a.t && !a.symbolic) {
    const Rational m = m_of(a.n, *a.t);
    r.payload["t"] = *a.t;
    r.payload["m"] = rat(m);
    r.payload["f"] = qpoly(f_at(a.n, m));
    r.payload["q"] = big(q_of(a.n, *a.t));
  } else {
    r.payload["f"] = mpoly_coeffs(build_f(a.n).poly);
  }
  return r;
}

// ---- identities -----------------------------------------------------------

struct IdentityArgs {
  unsigned n_max = 8;
  std::uint64_t seed = 42;
  unsigned trials = 20;
};

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 201) - 100;
  const long den = static_cast<long>(rng() % 40) + 1;
  return make_rational(num, den);
}

Result cmd_identities(const IdentityArgs& a) {
  if (a.n_max < 2) throw UsageError("--n-max must be at least 2");
  std::mt19937_64 rng(a.seed);
  CheckReport rep;
  rep.append(check_recursions(a.n_max));
  rep.append(check_recursion_reproduces_definition(a.n_max));
  rep.append(check_r_at_omega(a.n_max));
  rep.append(check_rn_quadratic_resultant(a.n_max));
  rep.append(check_symbolic_coprime(std::min(a.n_max, 8u)));
  for (unsigned n = 2; n <= a.n_max; ++n) {
    // m-degree <= 2 and alpha-degree <= n: a grid of 2n+3 by n+1 points decides the identity.
    std::vector<Rational> ms, alphas;
    for (long i = 0; i < static_cast<long>(2 * n + 3); ++i) ms.emplace_back(i - static_cast<long>(n), 1);
    for (long i = 0; i <= static_cast<long>(n); ++i) alphas.push_back(make_rational(2 * i - 1, 3));
    rep.append(check_transform_identity(n, ms, alphas));
    std::vector<std::pair<Rational, Rational>> pairs;
    std::vector<Rational> sample_m;
    for (unsigned k = 0; k < a.trials; ++k) {
      pairs.emplace_back(random_rational(rng), random_rational(rng));
      sample_m.push_back(random_rational(rng));
    }
    rep.append(check_transform_pairs(n, pairs));
    rep.append(check_resultant_laws(n, sample_m));
    std::vector<long> ts;
    for (unsigned k = 0; k < a.trials; ++k) ts.push_back(static_cast<long>(rng() % 401) - 200);
    rep.append(check_discriminants(n, sample_m, ts));

    const CycloElt alpha = alpha_of(n);
    rep.add("r_at_alpha_vanishes", n, evaluate(r_poly(n), alpha).is_zero());
    const auto ord = moebius_matrix_order(alpha, 4 * n);
    rep.add("moebius_order", n, ord.order && *ord.order == n,
            ord.order ? "order " + std::to_string(*ord.order) : "order exceeds bound");
    rep.add("r_shift", n, check_R_shift(n));
    rep.add("quadratic_remainder_period", n, remainder_mod_quadratic_period(n).holds);
  }
  Result r;
  r.payload["n_max"] = a.n_max;
  r.payload["seed"] = std::to_string(a.seed);
  r.payload["trials"] = a.trials;
  r.payload["items"] = items_json(rep);
  r.payload["passed"] = rep.passed();
  if (!rep.passed()) {
    r.code = kFail;
    r.status = "fail";
  }
  return r;
}

// ---- integral-basis / irreducibility / dual-basis -------------------------

struct FieldArgs {
  unsigned n = 2;
  long t = 0;
  std::string strategy = "radical";
  std::string gate = "strict";
};

/// "(a + b*B + c*B^2)/d" with B standing for beta.
std::string element_text(const FieldElt& e) {
  std::string s;
  for (std::size_t i = 0; i < e.num.size(); ++i) {
    const BigInt& c = e.num[i];
    if (c == 0) continue;
    const BigInt a = abs(c);
    std::string term = i == 0 || a != 1 ? a.get_str() : "";
    if (i > 0) term += (term.empty() ? "" : "*") + std::string("B") + (i > 1 ? "^" + std::to_string(i) : "");
    if (s.empty()) s = (c < 0 ? "-" : "") + term;
    else s += (c < 0 ? " - " : " + ") + term;
  }
  if (s.empty()) s = "0";
  return e.den == 1 ? s : "(" + s + ")/" + e.den.get_str();
}

json order_json(const Order& o) {
  json basis = json::array();
  for (std::size_t i = 0; i < o.basis.rows(); ++i) {
    const FieldElt e = o.element(i);
    basis.push_back({{"num", zpoly(ZPoly(e.num))}, {"den", big(e.den)}, {"text", element_text(e)}});
  }
  return {{"den", big(o.den)},
          {"hnf", int_matrix(o.basis)},
          {"index", big(o.index())},
          {"field_discriminant", big(order_discriminant(o))},
          {"basis", basis}};
}

Result cmd_integral_basis(const FieldArgs& a) {
  require_field_degree(a.n);
  const Gate gate = parse_gate(a.gate);
  Result r;
  r.payload["n"] = a.n;
  r.payload["t"] = a.t;
  r.payload["gate"] = to_string(gate);
  r.payload["strategy"] = a.strategy;
  const auto v = valid_parameter(a.n, a.t, gate);
  if (!v.valid) {
    r.payload["reason"] = "parameter not covered: " + v.reason;
    r.code = kNotCovered;
    r.status = "not_covered";
    return r;
  }
  const FieldPtr k = NumberField::certified(a.n, a.t);
  r.payload["poly"] = zpoly(k->poly());
  r.payload["poly_discriminant"] = big(k->poly_discriminant());
  r.payload["witness_prime"] = big(*k->witness());
  if (a.strategy == "both") {
    const Order e = integral_basis(k, Strategy::Enumerate, gate);
    const Order d = integral_basis(k, Strategy::Radical, gate);
    r.payload["order"] = order_json(d);
    r.payload["strategies_agree"] = e.same_lattice(d);
    if (!e.same_lattice(d)) {
      r.payload["order_enumerate"] = order_json(e);
      r.code = kFail;
      r.status = "fail";
    }
  } else {
    r.payload["order"] = order_json(integral_basis(k, parse_strategy(a.strategy), gate));
  }
  return r;
}

Result cmd_irreducibility(const FieldArgs& a) {
  require_field_degree(a.n);
  const Gate gate = parse_gate(a.gate);
  Result r;
  r.payload["n"] = a.n;
  r.payload["t"] = a.t;
  r.payload["q"] = big(q_of(a.n, a.t));
  r.payload["gate"] = to_string(gate);
  const auto v = valid_parameter(a.n, a.t, gate);
  r.payload["valid"] = v.valid;
  if (!v.reason.empty()) r.payload["reason"] = v.reason;
  if (auto w = eisenstein_shift_check(a.n, a.t)) {
    r.payload["witness_prime"] = big(w->prime);
    r.payload["shifted_poly"] = zpoly(w->shifted);
    r.payload["eisenstein_verified"] = is_eisenstein(w->shifted, w->prime);
  }
  if (!v.valid) {
    r.code = kNotCovered;
    r.status = "not_covered";
  }
  return r;
}

Result cmd_dual_basis(const FieldArgs& a) {
  require_field_degree(a.n);
  const FieldPtr k = NumberField::uncertified(a.n, a.t);
  const DualBasis db = dual_basis(k);
  Result r;
  r.payload["n"] = a.n;
  r.payload["t"] = a.t;
  r.payload["poly"] = zpoly(k->poly());
  r.payload["matrix"] = rat_matrix(db.c);
  r.payload["d"] = big(db.d);
  const bool dual_ok = check_trace_duality(db);
  r.payload["trace_duality"] = dual_ok;
  bool ok = dual_ok;
  if (a.n <= 12) {
    const BigInt want = expected_dual_denominator(a.n, a.t);
    r.payload["expected_d"] = big(want);
    r.payload["delta"] = delta_n(a.n);
    r.payload["d_matches"] = want == db.d;
    ok = ok && want == db.d;
  }
  if (!ok) {
    r.code = kFail;
    r.status = "fail";
  }
  return r;
}

// ---- period-scan ----------------------------------------------------------

struct ScanArgs {
  unsigned n = 2;
  long modulus = 1;
  long t_min = -50, t_max = 50;
  unsigned sample_classes = 0;
  unsigned per_class_min = 3;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  std::string strategy = "radical";
  std::string gate = "strict";
  bool minimality = false;
};

json fingerprint_json(const CanonicalBasis& c) { return {{"den", big(c.den)}, {"hnf", int_matrix(c.h)}}; }

json report_json(const PeriodReport& rep) {
  json classes = json::array();
  for (const auto& cl : rep.classes) {
    json ts = json::array();
    for (const auto& m : cl.members) ts.push_back(m.t);
    json o{{"residue", cl.residue}, {"t", ts}, {"consistent", cl.consistent},
           {"fingerprint", fingerprint_json(cl.members.front().basis)},
           {"index", big(cl.members.front().index)}};
    if (cl.witness) o["witness"] = {cl.witness->first, cl.witness->second};
    classes.push_back(o);
  }
  json skipped = json::array();
  for (const auto& s : rep.skipped) skipped.push_back({{"t", s.t}, {"reason", s.reason}});
  return {{"n", rep.n},
          {"modulus", rep.modulus},
          {"t_min", rep.t_lo},
          {"t_max", rep.t_hi},
          {"gate", to_string(rep.options.gate)},
          {"strategy", to_string(rep.options.strategy)},
          {"consistent", rep.consistent},
          {"field_count", rep.field_count()},
          {"classes", classes},
          {"skipped", skipped}};
}

json minimality_json(const std::vector<MinimalityWitness>& ws) {
  json a = json::array();
  for (const auto& w : ws) {
    json o{{"prime", big(w.prime)}};
    if (w.pair) o["pair"] = {w.pair->first, w.pair->second};
    else o["status"] = "not refuted in range";
    a.push_back(o);
  }
  return a;
}

Result cmd_period_scan(const ScanArgs& a) {
  require_field_degree(a.n);
  if (a.modulus < 1) throw UsageError("--modulus must be positive");
  if (a.t_min > a.t_max) throw UsageError("empty t range");
  ScanOptions opt{parse_gate(a.gate), parse_strategy(a.strategy), std::max(1u, a.workers)};
  const PeriodReport rep =
      a.sample_classes ? period_scan_sampled(a.n, a.modulus, a.t_min, a.t_max,
                                             {a.sample_classes, a.per_class_min, a.seed}, opt)
                       : period_scan(a.n, a.modulus, a.t_min, a.t_max, opt);
  Result r;
  r.payload = report_json(rep);
  if (a.sample_classes) r.payload["sample"] = {{"classes", a.sample_classes}, {"per_class_min", a.per_class_min}, {"seed", std::to_string(a.seed)}};
  if (a.minimality) r.payload["minimality"] = minimality_json(minimality_witness(rep));
  if (!rep.consistent) {
    r.code = kFail;
    r.status = "fail";
  }
  return r;
}

// ---- verify-tables --------------------------------------------------------

struct TableArgs {
  std::string scope = "all";
  unsigned workers = 1;
  bool quick = false;
};

struct FinalScope {
  unsigned n;
  long range;
};

Result cmd_verify_tables(const TableArgs& a) {
  Result r;
  bool ok = true;
  const bool all = a.scope == "all";
  if (all || a.scope == "delta") {
    const CheckReport rep = delta_table_verify(2, 12, a.quick ? 2 : 5, Gate::Strict);
    r.payload["delta"] = {{"items", items_json(rep)}, {"passed", rep.passed()}};
    ok = ok && rep.passed();
  }
  if (all || a.scope == "bounds") {
    json rows = json::array();
    bool pass = true;
    for (unsigned n = 2; n <= 12; ++n) {
      const BigInt pl = periodl_value(n), pb = period_bound(n);
      bool chain = mpz_divisible_p(pb.get_mpz_t(), pl.get_mpz_t()) != 0;
      json row{{"n", n}, {"periodl", big(pl)}, {"period_bound", big(pb)}, {"index_bound_Cn", big(index_bound_Cn(n))}};
      auto it = final_period_table().find(n);
      if (it != final_period_table().end()) {
        row["final"] = it->second;
        chain = chain && mpz_divisible_ui_p(pl.get_mpz_t(), static_cast<unsigned long>(it->second));
      }
      row["chain_divides"] = chain;
      pass = pass && chain;
      rows.push_back(row);
    }
    r.payload["bounds"] = {{"rows", rows}, {"passed", pass}};
    ok = ok && pass;
  }
  if (all || a.scope == "final") {
    const std::vector<FinalScope> scopes =
        a.quick ? std::vector<FinalScope>{{2, 60}, {3, 30}, {4, 60}, {5, 100}, {6, 60}, {8, 220}, {9, 20}, {12, 1000}}
                : std::vector<FinalScope>{{2, 300}, {3, 300}, {4, 300}, {5, 300}, {6, 300}, {8, 500}, {9, 100}, {12, 4000}};
    json rows = json::array();
    bool pass = true;
    ScanOptions opt{Gate::Strict, Strategy::Radical, std::max(1u, a.workers)};
    for (const auto& s : scopes) {
      const long n0 = final_period_table().at(s.n);
      const PeriodReport rep =
          s.n == 12 ? period_scan_sampled(s.n, n0, -s.range, s.range, {100000, 3, 0}, opt)
                    : period_scan(s.n, n0, -s.range, s.range, opt);
      json row{{"n", s.n}, {"n0", n0}, {"t_range", s.range}, {"consistent", rep.consistent},
               {"classes", rep.classes.size()}, {"field_count", rep.field_count()}};
      if (n0 > 1) row["minimality"] = minimality_json(minimality_witness(rep));
      pass = pass && rep.consistent;
      rows.push_back(row);
    }
    r.payload["final"] = {{"rows", rows}, {"passed", pass}};
    ok = ok && pass;
  }
  r.payload["scope"] = a.scope;
  if (!ok) {
    r.code = kFail;
    r.status = "fail";
  }
  return r;
}

// ---- output ---------------------------------------------------------------

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized simplest polynomial families: identities, integral bases, periodicity"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_file, format = "json";
  app.add_option("--out", out_file, "Write the report to FILE instead of stdout");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  FamilyArgs fam;
  long fam_t = 0;
  auto* c_family = app.add_subcommand("family", "Coefficients of f^(n) and r^(n)");
  c_family->add_option("--n", fam.n)->required();
  auto* fam_t_opt = c_family->add_option("--t", fam_t, "Integer parameter");
  c_family->add_flag("--symbolic", fam.symbolic, "Coefficients as polynomials in m");

  IdentityArgs ids;
  auto* c_ids = app.add_subcommand("identities", "Exact identity suite");
  c_ids->add_option("--n-max", ids.n_max)->capture_default_str();
  c_ids->add_option("--seed", ids.seed)->capture_default_str();
  c_ids->add_option("--trials", ids.trials)->capture_default_str();

  auto add_field = [](CLI::App* c, FieldArgs& f, bool with_strategy) {
    c->add_option("--n", f.n)->required();
    c->add_option("--t", f.t)->required()->allow_extra_args(false);
    if (with_strategy) {
      c->add_option("--strategy", f.strategy)->check(CLI::IsMember({"enumerate", "radical", "both"}))->capture_default_str();
    }
    c->add_option("--gate", f.gate)->check(CLI::IsMember({"strict", "relaxed"}))->capture_default_str();
  };
  FieldArgs ib, irr, dual;
  auto* c_ib = app.add_subcommand("integral-basis", "Maximal order as an HNF basis");
  add_field(c_ib, ib, true);
  auto* c_irr = app.add_subcommand("irreducibility", "Eisenstein certificate and parameter gate");
  add_field(c_irr, irr, false);
  auto* c_dual = app.add_subcommand("dual-basis", "Trace-dual basis of the power basis");
  c_dual->add_option("--n", dual.n)->required();
  c_dual->add_option("--t", dual.t)->required();

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("period-scan", "Compare integral bases across residue classes");
  c_scan->add_option("--n", scan.n)->required();
  c_scan->add_option("--modulus", scan.modulus)->required();
  c_scan->add_option("--t-min", scan.t_min)->capture_default_str();
  c_scan->add_option("--t-max", scan.t_max)->capture_default_str();
  c_scan->add_option("--sample-classes", scan.sample_classes, "Scan this many seeded residue classes (0: all)");
  c_scan->add_option("--per-class-min", scan.per_class_min)->capture_default_str();
  c_scan->add_option("--seed", scan.seed)->capture_default_str();
  c_scan->add_option("--workers", scan.workers)->capture_default_str();
  c_scan->add_option("--strategy", scan.strategy)->check(CLI::IsMember({"enumerate", "radical"}))->capture_default_str();
  c_scan->add_option("--gate", scan.gate)->check(CLI::IsMember({"strict", "relaxed"}))->capture_default_str();
  c_scan->add_flag("--minimality", scan.minimality, "Search minimality witnesses for each prime of the modulus");

  TableArgs tables;
  auto* c_tables = app.add_subcommand("verify-tables", "Reproduce the delta and period tables");
  c_tables->add_option("--scope", tables.scope)->check(CLI::IsMember({"delta", "final", "bounds", "all"}))->capture_default_str();
  c_tables->add_option("--workers", tables.workers)->capture_default_str();
  c_tables->add_flag("--quick", tables.quick, "Smaller parameter ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  json command{{"subcommand", app.get_subcommands().front()->get_name()}};
  for (const auto* opt : app.get_subcommands().front()->get_options())
    if (opt->count() > 0 && !opt->get_lnames().empty())
      command[opt->get_lnames().front()] = opt->as<std::string>();

  const auto start = std::chrono::steady_clock::now();
  Result res;
  try {
    if (c_family->parsed()) {
      if (fam_t_opt->count()) fam.t = fam_t;
      res = cmd_family(fam);
    } else if (c_ids->parsed()) {
      res = cmd_identities(ids);
    } else if (c_ib->parsed()) {
      res = cmd_integral_basis(ib);
    } else if (c_irr->parsed()) {
      res = cmd_irreducibility(irr);
    } else if (c_dual->parsed()) {
      res = cmd_dual_basis(dual);
    } else if (c_scan->parsed()) {
      res = cmd_period_scan(scan);
    } else {
      res = cmd_verify_tables(tables);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterNotCovered& e) {
    res.payload = {{"reason", e.what()}};
    res.code = kNotCovered;
    res.status = "not_covered";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json report{{"schema_version", kSchema},
              {"command", command},
              {"status", res.status},
              {"result", res.payload},
              {"timing", {{"seconds", secs}, {"kernels", kernels::isa_name(kernels::active().isa)}}}};

  std::ostringstream os;
  if (format == "json") os << report.dump(2) << "\n";
  else flatten(report, "", os);

  if (out_file.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return kUsage;
    }
    f << os.str();
  }
  return res.code;
}
