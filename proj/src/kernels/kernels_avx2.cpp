// Compiled with -mavx2; only reached after a runtime CPU check in dispatch.cpp.

#include <immintrin.h>

#include "artinres/kernels.hpp"

namespace artinres::kernels {
namespace {

// High 32 bits of the 32x32 products, lane by lane.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_mul_epu32(a, b);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  return _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

// Barrett reduction of r < 2^32: q underestimates r / p by at most one, so a single
// conditional subtraction (min with the wrapped difference) lands in [0, p).
inline __m256i reduce(__m256i r, __m256i vp, __m256i vm) {
  __m256i q = mulhi_epu32(r, vm);
  __m256i t = _mm256_sub_epi32(r, _mm256_mullo_epi32(q, vp));
  return _mm256_min_epu32(t, _mm256_sub_epi32(t, vp));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n,
               const Modulus& mod) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(mod.p()));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(mod.barrett()));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    __m256i r = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), reduce(r, vp, vm));
  }
  const std::uint32_t p = mod.p();
  for (; k < n; ++k) dst[k] = (dst[k] + c * src[k]) % p;
}

void scale_avx2(std::uint32_t* row, std::uint32_t c, std::size_t n, const Modulus& mod) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(mod.p()));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(mod.barrett()));
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + k), reduce(_mm256_mullo_epi32(x, vc), vp, vm));
  }
  const std::uint32_t p = mod.p();
  for (; k < n; ++k) row[k] = (row[k] * c) % p;
}

constexpr KernelTable kAvx2{Backend::avx2, &axpy_avx2, &scale_avx2};

}  // namespace

const KernelTable& avx2_table() noexcept { return kAvx2; }

}  // namespace artinres::kernels
