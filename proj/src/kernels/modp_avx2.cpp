#include "mckay/kernels/modp.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MCKAY_HAVE_X86 1
#else
#define MCKAY_HAVE_X86 0
#endif

namespace mckay::kernels::avx2 {

#if MCKAY_HAVE_X86

namespace {

// Reduce four exact integers held as doubles (0 <= t < 2^53) into [0, p).
// floor(t * (1/p)) can be off by one either way; two masked corrections fix it.
__attribute__((target("avx2,fma"))) inline __m256d reduce4(__m256d t, __m256d pd, __m256d invp) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, invp));
  __m256d r = _mm256_fnmadd_pd(q, pd, t);
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
  return r;
}

__attribute__((target("avx2,fma"))) inline __m256d load4(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

__attribute__((target("avx2,fma"))) inline void store4(std::uint32_t* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvtpd_epi32(v));
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod(std::span<std::uint32_t> dst,
                                                  std::span<const std::uint32_t> src, std::uint32_t s,
                                                  std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d sd = _mm256_set1_pd(static_cast<double>(s));
  std::size_t i = 0;
  const std::size_t n = dst.size();
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_fmadd_pd(load4(src.data() + i), sd, load4(dst.data() + i));
    store4(dst.data() + i, reduce4(t, pd, invp));
  }
  scalar::axpy_mod(dst.subspan(i), src.subspan(i), s, p);
}

__attribute__((target("avx2,fma"))) void scale_mod(std::span<std::uint32_t> v, std::uint32_t s,
                                                   std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d sd = _mm256_set1_pd(static_cast<double>(s));
  std::size_t i = 0;
  const std::size_t n = v.size();
  for (; i + 4 <= n; i += 4) store4(v.data() + i, reduce4(_mm256_mul_pd(load4(v.data() + i), sd), pd, invp));
  scalar::scale_mod(v.subspan(i), s, p);
}

__attribute__((target("avx2,fma"))) std::uint32_t dot_mod(std::span<const std::uint32_t> a,
                                                          std::span<const std::uint32_t> b, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const std::size_t n = a.size();
  for (; i + 4 <= n; i += 4) acc = reduce4(_mm256_fmadd_pd(load4(a.data() + i), load4(b.data() + i), acc), pd, invp);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  std::uint64_t total = 0;
  for (double l : lanes) total += static_cast<std::uint64_t>(l);
  total += scalar::dot_mod(a.subspan(i), b.subspan(i), p);
  return static_cast<std::uint32_t>(total % p);
}

#else

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p) {
  scalar::axpy_mod(dst, src, s, p);
}
void scale_mod(std::span<std::uint32_t> v, std::uint32_t s, std::uint32_t p) { scalar::scale_mod(v, s, p); }
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  return scalar::dot_mod(a, b, p);
}

#endif

}  // namespace mckay::kernels::avx2
