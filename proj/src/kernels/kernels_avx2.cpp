#include <immintrin.h>

#include "kernels_impl.hpp"

namespace simplest::kernels::detail {

namespace {

// Exact for 0 <= acc < 2^20: the float quotient stays within 1/(8p) of the
// true value, which is at least 1/(2p) away from the next integer.
inline __m256i mod_small(__m256i acc, __m256 inv_p, __m256i p) {
  const __m256 half = _mm256_set1_ps(0.5f);
  __m256 q = _mm256_floor_ps(_mm256_mul_ps(_mm256_add_ps(_mm256_cvtepi32_ps(acc), half), inv_p));
  return _mm256_sub_epi32(acc, _mm256_mullo_epi32(_mm256_cvttps_epi32(q), p));
}

constexpr std::uint64_t kExactLimit = std::uint64_t(1) << 20;

}  // namespace

void trace_filter_avx2(const std::uint32_t* gram, unsigned n, std::uint32_t p,
                       const std::uint8_t* digits, std::size_t count, std::uint8_t* pass) {
  const std::uint64_t worst = std::uint64_t(n) * (p - 1) * (p - 1);
  if (worst >= kExactLimit) {
    trace_filter_scalar(gram, n, p, digits, count, pass);
    return;
  }
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t c = 0;
  for (; c + 8 <= count; c += 8) {
    __m256i v[kMaxDegree];
    for (unsigned i = 0; i < n; ++i) {
      const __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(digits + i * count + c));
      v[i] = _mm256_cvtepu8_epi32(bytes);
    }
    __m256i bad = zero;
    for (unsigned j = 0; j < n; ++j) {
      __m256i acc = zero;
      for (unsigned i = 0; i < n; ++i)
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(v[i], _mm256_set1_epi32(static_cast<int>(gram[i * n + j]))));
      bad = _mm256_or_si256(bad, mod_small(acc, inv_p, pv));
    }
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(bad, zero)));
    for (int l = 0; l < 8; ++l) pass[c + static_cast<std::size_t>(l)] = (mask >> l) & 1;
  }
  if (c < count) {
    // Tail: run the reference on the remaining candidates.
    const std::size_t rest = count - c;
    std::uint8_t buf[8 * kMaxDegree];
    for (unsigned i = 0; i < n; ++i)
      for (std::size_t l = 0; l < rest; ++l) buf[i * rest + l] = digits[i * count + c + l];
    trace_filter_scalar(gram, n, p, buf, rest, pass + c);
  }
}

void algebra_mul_avx2(const std::uint32_t* table, unsigned n, std::uint32_t p,
                      const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c) {
  const std::uint64_t worst = (p - 1) + std::uint64_t(n) * (p - 1) * (p - 1);
  if (worst >= kExactLimit || n > kMaxDegree) {
    algebra_mul_scalar(table, n, p, a, b, c);
    return;
  }
  const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const unsigned chunks = (n + 7) / 8;
  __m256i acc[kMaxDegree / 8];
  __m256i tail_mask = _mm256_set1_epi32(-1);
  if (n % 8) {
    alignas(32) int m[8];
    for (unsigned l = 0; l < 8; ++l) m[l] = l < n % 8 ? -1 : 0;
    tail_mask = _mm256_load_si256(reinterpret_cast<const __m256i*>(m));
  }
  for (unsigned q = 0; q < chunks; ++q) acc[q] = _mm256_setzero_si256();
  for (unsigned i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (!b[j]) continue;
      const __m256i coef = _mm256_set1_epi32(static_cast<int>(std::uint64_t(a[i]) * b[j] % p));
      const int* row = reinterpret_cast<const int*>(table + (std::size_t(i) * n + j) * n);
      for (unsigned q = 0; q < chunks; ++q) {
        const bool last = q + 1 == chunks && (n % 8);
        const __m256i t = last ? _mm256_maskload_epi32(row + 8 * q, tail_mask)
                               : _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + 8 * q));
        acc[q] = _mm256_add_epi32(acc[q], _mm256_mullo_epi32(coef, t));
      }
    }
    for (unsigned q = 0; q < chunks; ++q) acc[q] = mod_small(acc[q], inv_p, pv);
  }
  for (unsigned q = 0; q < chunks; ++q) {
    alignas(32) std::uint32_t out[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), acc[q]);
    for (unsigned l = 0; l < 8 && 8 * q + l < n; ++l) c[8 * q + l] = out[l];
  }
}

}  // namespace simplest::kernels::detail
