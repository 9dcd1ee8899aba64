#include "kernels_impl.hpp"

namespace simplest::kernels::detail {

void trace_filter_scalar(const std::uint32_t* gram, unsigned n, std::uint32_t p,
                         const std::uint8_t* digits, std::size_t count, std::uint8_t* pass) {
  for (std::size_t c = 0; c < count; ++c) {
    bool ok = true;
    for (unsigned j = 0; j < n && ok; ++j) {
      std::uint64_t acc = 0;
      for (unsigned i = 0; i < n; ++i) acc += std::uint64_t(digits[i * count + c]) * gram[i * n + j];
      ok = acc % p == 0;
    }
    pass[c] = ok ? 1 : 0;
  }
}

void algebra_mul_scalar(const std::uint32_t* table, unsigned n, std::uint32_t p,
                        const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c) {
  std::uint64_t acc[kMaxDegree] = {};
  for (unsigned i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (!b[j]) continue;
      const std::uint64_t coef = std::uint64_t(a[i]) * b[j] % p;
      const std::uint32_t* row = table + (std::size_t(i) * n + j) * n;
      for (unsigned k = 0; k < n; ++k) acc[k] += coef * row[k];
    }
    for (unsigned k = 0; k < n; ++k) acc[k] %= p;
  }
  for (unsigned k = 0; k < n; ++k) c[k] = static_cast<std::uint32_t>(acc[k] % p);
}

}  // namespace simplest::kernels::detail
