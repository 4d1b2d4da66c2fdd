#pragma once

// Row kernels for dense linear algebra over F_p, used by the character-table
// eigenspace splitting. Every kernel has a portable scalar reference and an
// AVX2 variant; the variant is chosen once at runtime from CPUID and can be
// pinned with MCKAY_ISA=scalar|avx2 or force_isa().
//
// All inputs are residues in [0, p) with p < 2^26.

#include <cstdint>
#include <span>
#include <string_view>

namespace mckay::kernels {

enum class Isa { kScalar, kAvx2 };

Isa active_isa();
bool isa_available(Isa isa);
void force_isa(Isa isa);
std::string_view isa_name(Isa isa);

inline constexpr std::uint32_t kMaxModulus = 1u << 26;

// dst <- dst + s * src (mod p)
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p);
// v <- s * v (mod p)
void scale_mod(std::span<std::uint32_t> v, std::uint32_t s, std::uint32_t p);
// sum a_i b_i (mod p)
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t s, std::uint32_t p);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t s, std::uint32_t p);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p);
}  // namespace avx2

// Scalar modular helpers.
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t n);

}  // namespace mckay::kernels
