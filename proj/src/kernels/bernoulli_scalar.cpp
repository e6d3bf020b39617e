#include <cmath>

#include "sidonpow/kernels/bernoulli.hpp"

namespace sidonpow::kernels {

u64 probability_threshold(double alpha) noexcept {
  if (!(alpha > 0.0)) return 0;
  if (alpha >= 1.0) return kUnit;
  // alpha * 2^53 is exact in double
  return static_cast<u64>(std::ceil(std::ldexp(alpha, 53)));
}

void bernoulli_scalar(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
                      std::span<std::uint8_t> out) noexcept {
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = uniform_bits(key, values[i]) < thresholds[i] ? 1 : 0;
  }
}

}  // namespace sidonpow::kernels
