#pragma once

// Small-prime kernels used by the saturation strategies. Each kernel has a
// scalar reference implementation and an AVX2 variant; dispatch happens once
// at runtime.

#include <cstddef>
#include <cstdint>

namespace simplest::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  /// For `count` candidate vectors stored coordinate-major (digits[i * count + c]
  /// is coordinate i of candidate c), sets pass[c] = 1 iff v_c * G == 0 mod p.
  /// G is n x n row-major with entries in [0, p).
  void (*trace_filter)(const std::uint32_t* gram, unsigned n, std::uint32_t p,
                       const std::uint8_t* digits, std::size_t count, std::uint8_t* pass);
  /// c_k = sum_{i,j} a_i b_j T[(i * n + j) * n + k] mod p, all entries in [0, p).
  void (*algebra_mul)(const std::uint32_t* table, unsigned n, std::uint32_t p,
                      const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c);
};

const KernelTable& scalar_kernels();
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The active table: AVX2 when available unless SIMPLEST_KERNELS=scalar.
const KernelTable& active();
/// Overrides the active table (tests and benchmarks).
void force(Isa isa);

const char* isa_name(Isa isa);

}  // namespace simplest::kernels
