#include <stdexcept>

#include "mckay/kernels/modp.hpp"

namespace mckay::kernels {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p) {
  const std::uint64_t sm = s;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + sm * src[i]) % p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t s, std::uint32_t p) {
  const std::uint64_t sm = s;
  for (auto& x : v) x = static_cast<std::uint32_t>(sm * x % p);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + static_cast<std::uint64_t>(a[i]) * b[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace scalar
}  // namespace mckay::kernels
