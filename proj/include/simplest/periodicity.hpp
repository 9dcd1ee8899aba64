#pragma once

// Trace-form dual bases, the dual-basis denominator table, HNF fingerprints
// of integral bases and periodicity scans over the parameter t.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simplest/family.hpp"
#include "simplest/integrality.hpp"

namespace simplest {

/// Tr(beta^k) for k = 0..k_max.
std::vector<Rational> trace_powers(const NumberField& field, unsigned k_max);

struct DualBasis {
  FieldPtr field;
  RatMatrix c;  ///< row i: power-basis coefficients of gamma_i
  BigInt d;     ///< lcm of the entry denominators
};

/// C = T^{-1}, T_ij = Tr(beta^{i+j}).
DualBasis dual_basis(const FieldPtr& field);

/// Checks Tr(gamma_i beta^j) == [i == j] for all i, j.
bool check_trace_duality(const DualBasis& db);

/// Exponent delta_n in d = 3^{delta_n} n Q(t), for 2 <= n <= 12.
unsigned delta_n(unsigned n);
BigInt expected_dual_denominator(unsigned n, long t);

/// For each n in [n_lo, n_hi], the first `samples` valid t (by |t|, then
/// sign) with |t| <= t_limit; asserts d == 3^{delta_n} n Q(t) and duality.
CheckReport delta_table_verify(unsigned n_lo, unsigned n_hi, unsigned samples, Gate gate,
                               long t_limit = 400);

/// (den, H) of the maximal order: a fingerprint comparable across t.
struct CanonicalBasis {
  BigInt den = 1;
  IntMatrix h;

  friend bool operator==(const CanonicalBasis& a, const CanonicalBasis& b) {
    return a.den == b.den && a.h == b.h;
  }
  friend bool operator!=(const CanonicalBasis& a, const CanonicalBasis& b) { return !(a == b); }
};

CanonicalBasis canonical_basis(const Order& o);
CanonicalBasis canonical_basis(const FieldPtr& field, Strategy strategy = Strategy::Radical,
                               Gate gate = Gate::Strict);

/// Final table: n -> n0 for n in {2, 3, 4, 5, 6, 8, 9, 12}.
const std::map<unsigned, long>& final_period_table();
/// Period lengths implied by the dual-basis denominators, as base^n, n = 2..12.
BigInt periodl_value(unsigned n);

struct ScanOptions {
  Gate gate = Gate::Strict;
  Strategy strategy = Strategy::Radical;
  unsigned workers = 1;
};

struct SkippedParameter {
  long t = 0;
  std::string reason;
};

struct ScannedField {
  long t = 0;
  CanonicalBasis basis;
  BigInt index;
};

struct ClassReport {
  long residue = 0;
  std::vector<ScannedField> members;  ///< ascending t
  bool consistent = true;
  std::optional<std::pair<long, long>> witness;  ///< first differing pair
};

struct PeriodReport {
  unsigned n = 0;
  long modulus = 1;
  long t_lo = 0, t_hi = 0;
  ScanOptions options;
  std::vector<ClassReport> classes;  ///< ascending residue
  std::vector<SkippedParameter> skipped;
  bool consistent = true;

  std::size_t field_count() const;
};

/// Valid t in [t_lo, t_hi] (ascending) and the rejected ones with reasons.
std::pair<std::vector<long>, std::vector<SkippedParameter>> partition_parameters(
    unsigned n, long t_lo, long t_hi, Gate gate);

/// Fingerprints for the given parameters, in input order. Work is split over
/// `options.workers` threads; the result does not depend on the split.
std::vector<ScannedField> compute_fingerprints(unsigned n, const std::vector<long>& ts,
                                               const ScanOptions& options);

/// Groups valid t in [t_lo, t_hi] by t mod modulus and compares fingerprints.
PeriodReport period_scan(unsigned n, long modulus, long t_lo, long t_hi,
                         const ScanOptions& options = {});

struct ResidueSample {
  unsigned classes = 0;       ///< residue classes to scan
  unsigned per_class_min = 3; ///< valid t required in range per class
  std::uint64_t seed = 0;
};

/// Period scan restricted to a seeded sample of residue classes, each holding
/// at least `per_class_min` valid t in range.
PeriodReport period_scan_sampled(unsigned n, long modulus, long t_lo, long t_hi,
                                 const ResidueSample& sample, const ScanOptions& options = {});

struct MinimalityWitness {
  BigInt prime;
  std::optional<std::pair<long, long>> pair;  ///< nullopt: not refuted in range
};

/// For each prime p | n0: t == t' mod n0/p with different fingerprints.
std::vector<MinimalityWitness> minimality_witness(unsigned n, long n0, long t_lo, long t_hi,
                                                  const ScanOptions& options = {});
/// Same, reusing the fingerprints of a finished scan at modulus n0.
std::vector<MinimalityWitness> minimality_witness(const PeriodReport& scan);

}  // namespace simplest
