// p-maximal orders: trace-filtered enumeration and radical idealizers.

#include <cstdint>
#include <vector>

#include "simplest/integrality.hpp"
#include "simplest/kernels.hpp"

namespace simplest {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u64 mod_p(const BigInt& x, u64 p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

/// Basis of {a in F_p^rows : a * A = 0} for a rows x cols matrix A.
std::vector<std::vector<u64>> left_kernel_mod_p(const std::vector<std::vector<u64>>& a,
                                                std::size_t cols, u64 p) {
  const std::size_t rows = a.size();
  // Augment with the identity and eliminate on the first `cols` columns.
  std::vector<std::vector<u64>> m(rows, std::vector<u64>(cols + rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j] % p;
    m[i][cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = pow_mod(m[r][c], p - 2, p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols + rows; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    ++r;
  }
  std::vector<std::vector<u64>> ker;
  for (std::size_t i = r; i < rows; ++i) ker.emplace_back(m[i].begin() + static_cast<std::ptrdiff_t>(cols), m[i].end());
  return ker;
}

/// x with x * H = y for lower-triangular H (pivot of row i in column i).
std::optional<std::vector<BigInt>> solve_lower(const IntMatrix& h, const std::vector<BigInt>& y) {
  const std::size_t n = h.rows();
  std::vector<BigInt> x(n);
  for (std::size_t j = n; j-- > 0;) {
    BigInt acc = y[j];
    for (std::size_t i = j + 1; i < n; ++i) acc -= x[i] * h(i, j);
    if (!mpz_divisible_p(acc.get_mpz_t(), h(j, j).get_mpz_t())) return std::nullopt;
    mpz_divexact(x[j].get_mpz_t(), acc.get_mpz_t(), h(j, j).get_mpz_t());
  }
  return x;
}

/// y with y * B = z for upper-triangular B (standard row HNF).
std::optional<std::vector<BigInt>> solve_upper(const IntMatrix& b, const std::vector<BigInt>& z) {
  const std::size_t n = b.rows();
  std::vector<BigInt> y(n);
  for (std::size_t l = 0; l < n; ++l) {
    BigInt acc = z[l];
    for (std::size_t i = 0; i < l; ++i) acc -= y[i] * b(i, l);
    if (!mpz_divisible_p(acc.get_mpz_t(), b(l, l).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[l].get_mpz_t(), acc.get_mpz_t(), b(l, l).get_mpz_t());
  }
  return y;
}

void require_small_prime(const BigInt& p, unsigned long limit) {
  if (!is_prime(p)) throw ArithmeticError("saturation needs a prime");
  if (p >= limit) throw ArithmeticError("prime too large for the small-prime kernels");
}

// ---- Enumerate strategy ---------------------------------------------------

constexpr u64 kMaxCandidates = 50'000'000;
constexpr std::size_t kBlock = 4096;

IntMatrix gram_matrix(const Order& o) {
  const auto& s = o.field->power_traces();
  const std::size_t n = o.basis.rows();
  IntMatrix hs(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += o.basis(i, k) * s[k + l];
      hs(i, l) = acc;
    }
  IntMatrix g(n, n);
  const BigInt d2 = o.den * o.den;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (std::size_t l = 0; l < n; ++l) acc += hs(i, l) * o.basis(j, l);
      g(i, j) = Ring<BigInt>::exact_div(acc, d2);
    }
  return g;
}

/// First projective vector v over F_p with v*G == 0 mod p whose lift gives an
/// integral (v*H)/(pD); empty if none.
std::optional<std::vector<BigInt>> find_new_element(const Order& o, u32 p) {
  const unsigned n = o.field->degree();
  const IntMatrix g = gram_matrix(o);
  std::vector<u32> gp(n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) gp[i * n + j] = static_cast<u32>(mod_p(g(i, j), p));

  const auto& k = kernels::active();
  std::vector<std::uint8_t> digits(kBlock * n), pass(kBlock);
  std::vector<u32> counter(n);

  for (unsigned lead = 0; lead < n; ++lead) {
    // Free coordinates lead+1..n-1 run through all of F_p.
    const unsigned free = n - 1 - lead;
    u64 total = 1;
    for (unsigned i = 0; i < free; ++i) total *= p;
    u64 done = 0;
    std::fill(counter.begin(), counter.end(), 0);
    while (done < total) {
      const std::size_t count = static_cast<std::size_t>(std::min<u64>(kBlock, total - done));
      for (std::size_t c = 0; c < count; ++c) {
        for (unsigned i = 0; i < n; ++i) {
          std::uint8_t d = 0;
          if (i == lead) d = 1;
          else if (i > lead) d = static_cast<std::uint8_t>(counter[i]);
          digits[i * count + c] = d;
        }
        for (unsigned i = n; i-- > lead + 1;) {
          if (++counter[i] < p) break;
          counter[i] = 0;
        }
      }
      k.trace_filter(gp.data(), n, p, digits.data(), count, pass.data());
      for (std::size_t c = 0; c < count; ++c) {
        if (!pass[c]) continue;
        std::vector<BigInt> x(n);
        for (unsigned i = 0; i < n; ++i) {
          const unsigned d = digits[i * count + c];
          if (!d) continue;
          for (unsigned j = 0; j < n; ++j) x[j] += o.basis(i, j) * d;
        }
        if (is_algebraic_integer(FieldElt::make(o.field, x, o.den * p))) return x;
      }
      done += count;
    }
  }
  return std::nullopt;
}

Order enumerate_saturate(Order o, u32 p) {
  const unsigned n = o.field->degree();
  u64 space = 0, pw = 1;
  for (unsigned i = 0; i < n; ++i) {
    space += pw;
    pw *= p;
    if (space > kMaxCandidates) throw ArithmeticError("enumerate strategy: search space too large");
  }
  while (auto x = find_new_element(o, p)) {
    IntMatrix gens(n + 1, n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) gens(i, j) = o.basis(i, j) * p;
    gens.set_row(n, *x);
    o = Order::from_generators(o.field, o.den * p, gens);
  }
  return o;
}

// ---- Radical strategy -----------------------------------------------------

/// T[(i*n + j)*n + k]: coordinate k of w_i * w_j in the order basis.
std::vector<BigInt> structure_constants(const Order& o) {
  const unsigned n = o.field->degree();
  std::vector<BigInt> t(std::size_t(n) * n * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) {
      auto prod = o.field->mul_mod(o.basis.row(i), o.basis.row(j));
      for (auto& c : prod) c = Ring<BigInt>::exact_div(c, o.den);
      auto x = solve_lower(o.basis, prod);
      if (!x) throw InvariantViolation("lattice is not closed under multiplication");
      for (unsigned k = 0; k < n; ++k) {
        t[(std::size_t(i) * n + j) * n + k] = (*x)[k];
        t[(std::size_t(j) * n + i) * n + k] = (*x)[k];
      }
    }
  return t;
}

std::vector<u32> fp_power(const std::vector<u32>& table, unsigned n, u32 p, std::vector<u32> x, u64 e) {
  const auto& k = kernels::active();
  std::vector<u32> r(n, 0), tmp(n);
  r[0] = 1;  // w_0 = 1 in every order basis
  while (e) {
    if (e & 1) {
      k.algebra_mul(table.data(), n, p, r.data(), x.data(), tmp.data());
      r.swap(tmp);
    }
    e >>= 1;
    if (e) {
      k.algebra_mul(table.data(), n, p, x.data(), x.data(), tmp.data());
      x.swap(tmp);
    }
  }
  return r;
}

IntMatrix lift_with_p(const std::vector<std::vector<u64>>& vecs, unsigned n, u32 p) {
  IntMatrix gens(vecs.size() + n, n);
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (unsigned j = 0; j < n; ++j) gens(r, j) = static_cast<unsigned long>(vecs[r][j]);
  for (unsigned i = 0; i < n; ++i) gens(vecs.size() + i, i) = p;
  return hnf_of_generators(gens);
}

/// One idealizer step; returns nullopt when the order is already p-maximal.
std::optional<Order> radical_step(const Order& o, u32 p) {
  const unsigned n = o.field->degree();
  if (o.basis(0, 0) != o.den) throw InvariantViolation("order basis does not start with 1");
  const auto t = structure_constants(o);
  std::vector<u32> tp(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) tp[i] = static_cast<u32>(mod_p(t[i], p));

  // The radical of O/pO is the kernel of Frobenius^k once p^k >= n.
  u64 q = p;
  while (q < n) q *= p;
  std::vector<std::vector<u64>> frob(n, std::vector<u64>(n));
  for (unsigned i = 0; i < n; ++i) {
    std::vector<u32> e(n, 0);
    e[i] = 1;
    auto img = fp_power(tp, n, p, e, q);
    for (unsigned j = 0; j < n; ++j) frob[i][j] = img[j];
  }
  const auto rad = left_kernel_mod_p(frob, n, p);
  if (rad.empty()) return std::nullopt;
  const IntMatrix ideal = lift_with_p(rad, n, p);  // upper HNF, O-coordinates

  // Rows: u = w_k; columns: I-coordinates of w_k * b_j, reduced mod p.
  std::vector<std::vector<u64>> mult(n, std::vector<u64>(std::size_t(n) * n));
  for (unsigned k = 0; k < n; ++k)
    for (unsigned j = 0; j < n; ++j) {
      std::vector<BigInt> z(n);
      for (unsigned m = 0; m < n; ++m) {
        const BigInt& bm = ideal(j, m);
        if (bm == 0) continue;
        for (unsigned l = 0; l < n; ++l) z[l] += bm * t[(std::size_t(k) * n + m) * n + l];
      }
      auto y = solve_upper(ideal, z);
      if (!y) throw InvariantViolation("radical is not an ideal");
      for (unsigned l = 0; l < n; ++l) mult[k][std::size_t(j) * n + l] = mod_p((*y)[l], p);
    }
  const auto ker = left_kernel_mod_p(mult, std::size_t(n) * n, p);
  if (ker.empty()) return std::nullopt;
  const IntMatrix u = lift_with_p(ker, n, p);
  return Order::from_generators(o.field, o.den * p, u * o.basis);
}

Order radical_saturate(Order o, u32 p) {
  while (auto next = radical_step(o, p)) {
    if (next->same_lattice(o)) break;
    o = std::move(*next);
  }
  return o;
}

}  // namespace

Order p_maximal_order(const Order& start, const BigInt& p, Strategy strategy) {
  if (strategy == Strategy::Enumerate) {
    require_small_prime(p, 256);
    return enumerate_saturate(start, static_cast<u32>(p.get_ui()));
  }
  require_small_prime(p, 1u << 16);
  return radical_saturate(start, static_cast<u32>(p.get_ui()));
}

}  // namespace simplest
