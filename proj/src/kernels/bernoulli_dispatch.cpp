#include "sidonpow/kernels/bernoulli.hpp"

namespace sidonpow::kernels {

#if defined(SIDONPOW_HAVE_AVX2_KERNEL)
void bernoulli_avx2(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
                    std::span<std::uint8_t> out) noexcept;
#endif

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(SIDONPOW_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept {
  static const Isa best = isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  return best;
}

void bernoulli(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
               std::span<std::uint8_t> out, Isa isa) noexcept {
#if defined(SIDONPOW_HAVE_AVX2_KERNEL)
  if (isa == Isa::avx2 && isa_available(Isa::avx2)) {
    bernoulli_avx2(key, values, thresholds, out);
    return;
  }
#endif
  (void)isa;
  bernoulli_scalar(key, values, thresholds, out);
}

void bernoulli(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
               std::span<std::uint8_t> out) noexcept {
  bernoulli(key, values, thresholds, out, best_isa());
}

}  // namespace sidonpow::kernels
