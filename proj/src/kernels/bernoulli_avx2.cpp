#include <immintrin.h>

#include "sidonpow/kernels/bernoulli.hpp"

namespace sidonpow::kernels {

namespace {

// low 64 bits of a 64x64 lane product, from three 32x32->64 multiplies
inline __m256i mullo64(__m256i a, __m256i b) noexcept {
  __m256i lo = _mm256_mul_epu32(a, b);
  __m256i a_hi_b = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  __m256i a_b_hi = _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32));
  __m256i cross = _mm256_slli_epi64(_mm256_add_epi64(a_hi_b, a_b_hi), 32);
  return _mm256_add_epi64(lo, cross);
}

inline __m256i mix64(__m256i z) noexcept {
  const __m256i m1 = _mm256_set1_epi64x(static_cast<long long>(0xbf58476d1ce4e5b9ULL));
  const __m256i m2 = _mm256_set1_epi64x(static_cast<long long>(0x94d049bb133111ebULL));
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), m1);
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), m2);
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

}  // namespace

void bernoulli_avx2(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
                    std::span<std::uint8_t> out) noexcept {
  const __m256i vkey = _mm256_set1_epi64x(static_cast<long long>(key));
  const __m256i golden = _mm256_set1_epi64x(static_cast<long long>(kGolden));
  std::size_t i = 0;
  const std::size_t n = values.size();
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
    __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(thresholds.data() + i));
    __m256i bits = _mm256_srli_epi64(mix64(_mm256_add_epi64(vkey, mullo64(v, golden))), 11);
    // both operands are below 2^63, so the signed compare is exact
    int mask = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(t, bits)));
    out[i + 0] = static_cast<std::uint8_t>(mask & 1);
    out[i + 1] = static_cast<std::uint8_t>((mask >> 1) & 1);
    out[i + 2] = static_cast<std::uint8_t>((mask >> 2) & 1);
    out[i + 3] = static_cast<std::uint8_t>((mask >> 3) & 1);
  }
  bernoulli_scalar(key, values.subspan(i), thresholds.subspan(i), out.subspan(i));
}

}  // namespace sidonpow::kernels
