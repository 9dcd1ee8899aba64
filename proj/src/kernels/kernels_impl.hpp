#pragma once

#include <cstddef>
#include <cstdint>

namespace simplest::kernels::detail {

inline constexpr unsigned kMaxDegree = 64;

void trace_filter_scalar(const std::uint32_t* gram, unsigned n, std::uint32_t p,
                         const std::uint8_t* digits, std::size_t count, std::uint8_t* pass);
void algebra_mul_scalar(const std::uint32_t* table, unsigned n, std::uint32_t p,
                        const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c);

#if SIMPLEST_HAVE_AVX2
void trace_filter_avx2(const std::uint32_t* gram, unsigned n, std::uint32_t p,
                       const std::uint8_t* digits, std::size_t count, std::uint8_t* pass);
void algebra_mul_avx2(const std::uint32_t* table, unsigned n, std::uint32_t p,
                      const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c);
#endif

}  // namespace simplest::kernels::detail
