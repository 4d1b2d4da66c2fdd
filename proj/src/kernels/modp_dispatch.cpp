#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mckay/kernels/modp.hpp"

namespace mckay::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("MCKAY_ISA")) {
    const std::string v(env);
    if (v == "scalar") return Isa::kScalar;
    if (v == "avx2" && isa_available(Isa::kAvx2)) return Isa::kAvx2;
  }
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error("requested ISA is not available on this CPU");
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p) {
  if (active_isa() == Isa::kAvx2) return avx2::axpy_mod(dst, src, s, p);
  scalar::axpy_mod(dst, src, s, p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t s, std::uint32_t p) {
  if (active_isa() == Isa::kAvx2) return avx2::scale_mod(v, s, p);
  scalar::scale_mod(v, s, p);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  if (active_isa() == Isa::kAvx2) return avx2::dot_mod(a, b, p);
  return scalar::dot_mod(a, b, p);
}

}  // namespace mckay::kernels
