#include <doctest.h>

#include <random>
#include <vector>

#include "simplest/integrality.hpp"
#include "simplest/kernels.hpp"

using namespace simplest;
namespace k = simplest::kernels;

namespace {

struct Restore {
  k::Isa isa = k::active().isa;
  ~Restore() { k::force(isa); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("dispatch") {
    CHECK(k::scalar_kernels().isa == k::Isa::Scalar);
    if (const auto* t = k::avx2_kernels()) CHECK(t->isa == k::Isa::Avx2);
    Restore r;
    k::force(k::Isa::Scalar);
    CHECK(k::active().isa == k::Isa::Scalar);
    CHECK(std::string(k::isa_name(k::Isa::Avx2)) == "avx2");
  }

  TEST_CASE("trace filter: AVX2 matches scalar") {
    const auto* avx = k::avx2_kernels();
    if (!avx) return;
    std::mt19937_64 rng(31);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 251u}) {
      for (unsigned n : {1u, 2u, 5u, 8u, 12u, 16u}) {
        const std::size_t count = 1 + rng() % 300;
        std::vector<std::uint32_t> g(n * n);
        for (auto& x : g) x = static_cast<std::uint32_t>(rng() % p);
        // Bias toward zero rows so that some candidates pass.
        for (unsigned i = 0; i < n; i += 2)
          for (unsigned j = 0; j < n; ++j) g[i * n + j] = 0;
        std::vector<std::uint8_t> digits(count * n);
        for (auto& d : digits) d = static_cast<std::uint8_t>(rng() % p);
        std::vector<std::uint8_t> a(count), b(count);
        k::scalar_kernels().trace_filter(g.data(), n, p, digits.data(), count, a.data());
        avx->trace_filter(g.data(), n, p, digits.data(), count, b.data());
        REQUIRE(a == b);
      }
    }
  }

  TEST_CASE("algebra multiply: AVX2 matches scalar") {
    const auto* avx = k::avx2_kernels();
    if (!avx) return;
    std::mt19937_64 rng(37);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 101u, 65521u}) {
      for (unsigned n : {1u, 3u, 8u, 9u, 12u, 17u}) {
        std::vector<std::uint32_t> t(std::size_t(n) * n * n), a(n), b(n), c1(n), c2(n);
        for (int trial = 0; trial < 10; ++trial) {
          for (auto& x : t) x = static_cast<std::uint32_t>(rng() % p);
          for (auto& x : a) x = static_cast<std::uint32_t>(rng() % p);
          for (auto& x : b) x = static_cast<std::uint32_t>(rng() % p);
          k::scalar_kernels().algebra_mul(t.data(), n, p, a.data(), b.data(), c1.data());
          avx->algebra_mul(t.data(), n, p, a.data(), b.data(), c2.data());
          REQUIRE(c1 == c2);
        }
      }
    }
  }

  TEST_CASE("saturation is kernel independent") {
    Restore r;
    for (auto [n, t] : {std::pair{4u, 7l}, {6u, 1l}, {8u, 2l}, {12u, 1l}}) {
      const FieldPtr f = NumberField::certified(n, t);
      k::force(k::Isa::Scalar);
      const Order s = integral_basis(f, Strategy::Radical);
      const Order se = n <= 8 ? integral_basis(f, Strategy::Enumerate) : s;
      k::force(k::Isa::Avx2);
      const Order v = integral_basis(f, Strategy::Radical);
      const Order ve = n <= 8 ? integral_basis(f, Strategy::Enumerate) : v;
      CHECK(s.same_lattice(v));
      CHECK(se.same_lattice(ve));
      CHECK(s.same_lattice(se));
    }
  }
}
