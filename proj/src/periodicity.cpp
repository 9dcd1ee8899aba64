#include "simplest/periodicity.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <thread>

namespace simplest {

std::vector<Rational> trace_powers(const NumberField& field, unsigned k_max) {
  std::vector<Rational> out;
  for (const auto& s : newton_power_sums(field.poly(), k_max)) out.emplace_back(s);
  return out;
}

DualBasis dual_basis(const FieldPtr& field) {
  const unsigned n = field->degree();
  const auto& s = field->power_traces();
  RatMatrix t(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) t(i, j) = s[i + j];
  RatMatrix c;
  try {
    c = inverse(t);
  } catch (const ArithmeticError&) {
    throw InvariantViolation("trace matrix is singular");
  }
  BigInt d = 1;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) d = lcm(d, BigInt(c(i, j).get_den()));
  return {field, std::move(c), d};
}

bool check_trace_duality(const DualBasis& db) {
  const unsigned n = db.field->degree();
  const auto& s = db.field->power_traces();
  // Tr(gamma_i beta^j) = sum_k c_ik Tr(beta^{k+j}).
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Rational acc = 0;
      for (unsigned k = 0; k < n; ++k) acc += db.c(i, k) * s[k + j];
      if (acc != (i == j ? 1 : 0)) return false;
    }
  return true;
}

unsigned delta_n(unsigned n) {
  static const unsigned table[] = {0, 0, 1, 3, 2, 4, 5, 4, 6, 9, 8};
  if (n < 2 || n > 12) throw ArithmeticError("delta_n is tabulated for 2 <= n <= 12");
  return table[n - 2];
}

BigInt expected_dual_denominator(unsigned n, long t) {
  return ipow(BigInt(3), delta_n(n)) * n * q_of(n, t);
}

CheckReport delta_table_verify(unsigned n_lo, unsigned n_hi, unsigned samples, Gate gate,
                               long t_limit) {
  CheckReport rep;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    unsigned found = 0;
    for (long a = 0; a <= t_limit && found < samples; ++a)
      for (long t : {a, -a}) {
        if (found >= samples || (a == 0 && t < 0)) continue;
        if (!valid_parameter(n, t, gate).valid) continue;
        ++found;
        const auto db = dual_basis(NumberField::certified(n, t));
        const BigInt want = expected_dual_denominator(n, t);
        const bool ok = db.d == want && check_trace_duality(db);
        rep.add("dual_denominator", n, ok,
                "t=" + std::to_string(t) + " d=" + db.d.get_str() + " expected=" + want.get_str());
      }
    if (found < samples)
      rep.add("dual_denominator_samples", n, false,
              "only " + std::to_string(found) + " valid t with |t| <= " + std::to_string(t_limit));
  }
  return rep;
}

CanonicalBasis canonical_basis(const Order& o) { return {o.den, o.basis}; }

CanonicalBasis canonical_basis(const FieldPtr& field, Strategy strategy, Gate gate) {
  return canonical_basis(integral_basis(field, strategy, gate));
}

const std::map<unsigned, long>& final_period_table() {
  static const std::map<unsigned, long> table{{2, 4},   {3, 1}, {4, 24}, {5, 75},
                                              {6, 36},  {8, 432}, {9, 1}, {12, 1944}};
  return table;
}

BigInt periodl_value(unsigned n) {
  // base^n; the n = 2, 3 entries are stated directly.
  static const std::map<unsigned, std::pair<long, unsigned>> table{
      {2, {4, 1}},        {3, {1, 1}},       {4, {12, 4}},   {5, {135, 5}},
      {6, {54, 6}},       {7, {567, 7}},     {8, {1944, 8}}, {9, {729, 9}},
      {10, {7290, 10}},   {11, {19683 * 11, 11}}, {12, {6561 * 12, 12}}};
  auto it = table.find(n);
  if (it == table.end()) throw ArithmeticError("period table covers 2 <= n <= 12");
  return ipow(BigInt(it->second.first), it->second.second);
}

std::size_t PeriodReport::field_count() const {
  std::size_t c = 0;
  for (const auto& cl : classes) c += cl.members.size();
  return c;
}

std::pair<std::vector<long>, std::vector<SkippedParameter>> partition_parameters(
    unsigned n, long t_lo, long t_hi, Gate gate) {
  if (t_lo > t_hi) throw ArithmeticError("empty parameter range");
  std::vector<long> ok;
  std::vector<SkippedParameter> skipped;
  for (long t = t_lo; t <= t_hi; ++t) {
    auto v = valid_parameter(n, t, gate);
    if (v.valid) ok.push_back(t);
    else skipped.push_back({t, v.reason});
  }
  return {ok, skipped};
}

std::vector<ScannedField> compute_fingerprints(unsigned n, const std::vector<long>& ts,
                                               const ScanOptions& options) {
  std::vector<ScannedField> out(ts.size());
  auto work = [&](std::size_t i) {
    const auto o = integral_basis(NumberField::certified(n, ts[i]), options.strategy, options.gate);
    out[i] = {ts[i], canonical_basis(o), o.index()};
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(ts.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < ts.size(); ++i) work(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < ts.size(); i += workers) work(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

long residue(long t, long m) {
  long r = t % m;
  return r < 0 ? r + m : r;
}

void fold_classes(PeriodReport& rep, std::vector<ScannedField> fields) {
  std::map<long, ClassReport> by;
  for (auto& f : fields) {
    auto& cl = by[residue(f.t, rep.modulus)];
    cl.residue = residue(f.t, rep.modulus);
    cl.members.push_back(std::move(f));
  }
  rep.consistent = true;
  for (auto& [r, cl] : by) {
    std::sort(cl.members.begin(), cl.members.end(),
              [](const ScannedField& a, const ScannedField& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < cl.members.size(); ++i)
      if (cl.members[i].basis != cl.members[0].basis) {
        cl.consistent = false;
        cl.witness = std::make_pair(cl.members[0].t, cl.members[i].t);
        break;
      }
    rep.consistent = rep.consistent && cl.consistent;
    rep.classes.push_back(std::move(cl));
  }
}

}  // namespace

PeriodReport period_scan(unsigned n, long modulus, long t_lo, long t_hi, const ScanOptions& options) {
  if (modulus < 1) throw ArithmeticError("modulus must be positive");
  PeriodReport rep;
  rep.n = n;
  rep.modulus = modulus;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.options = options;
  auto [ts, skipped] = partition_parameters(n, t_lo, t_hi, options.gate);
  rep.skipped = std::move(skipped);
  fold_classes(rep, compute_fingerprints(n, ts, options));
  return rep;
}

PeriodReport period_scan_sampled(unsigned n, long modulus, long t_lo, long t_hi,
                                 const ResidueSample& sample, const ScanOptions& options) {
  if (modulus < 1) throw ArithmeticError("modulus must be positive");
  PeriodReport rep;
  rep.n = n;
  rep.modulus = modulus;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.options = options;

  auto [ts, skipped] = partition_parameters(n, t_lo, t_hi, options.gate);
  std::map<long, std::vector<long>> by;
  for (long t : ts) by[residue(t, modulus)].push_back(t);
  std::vector<long> eligible;
  for (const auto& [r, v] : by)
    if (v.size() >= sample.per_class_min) eligible.push_back(r);

  // Partial Fisher-Yates with an explicit modulus so the pick is portable.
  std::mt19937_64 rng(sample.seed);
  const std::size_t k = std::min<std::size_t>(sample.classes, eligible.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (eligible.size() - i));
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(k);
  std::sort(eligible.begin(), eligible.end());

  std::vector<long> chosen;
  for (long r : eligible) chosen.insert(chosen.end(), by[r].begin(), by[r].end());
  std::sort(chosen.begin(), chosen.end());
  for (const auto& s : skipped)
    if (std::binary_search(eligible.begin(), eligible.end(), residue(s.t, modulus)))
      rep.skipped.push_back(s);
  fold_classes(rep, compute_fingerprints(n, chosen, options));
  return rep;
}

std::vector<MinimalityWitness> minimality_witness(const PeriodReport& scan) {
  std::vector<ScannedField> all;
  for (const auto& cl : scan.classes) all.insert(all.end(), cl.members.begin(), cl.members.end());
  std::sort(all.begin(), all.end(), [](const ScannedField& a, const ScannedField& b) { return a.t < b.t; });

  std::vector<MinimalityWitness> out;
  if (scan.modulus <= 1) return out;
  for (const auto& pe : factor(BigInt(scan.modulus))) {
    const long sub = scan.modulus / static_cast<long>(pe.prime.get_si());
    MinimalityWitness w{pe.prime, std::nullopt};
    std::map<long, const ScannedField*> first;
    for (const auto& f : all) {
      auto [it, fresh] = first.emplace(residue(f.t, sub), &f);
      if (!fresh && it->second->basis != f.basis) {
        w.pair = std::make_pair(it->second->t, f.t);
        break;
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<MinimalityWitness> minimality_witness(unsigned n, long n0, long t_lo, long t_hi,
                                                  const ScanOptions& options) {
  if (n0 < 1) throw ArithmeticError("period must be positive");
  if (n0 == 1) return {};
  return minimality_witness(period_scan(n, n0, t_lo, t_hi, options));
}

}  // namespace simplest
