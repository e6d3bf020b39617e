#include "sidonpow/sampling.hpp"

#include <vector>

#include "sidonpow/parallel.hpp"

namespace sidonpow {

namespace {
constexpr std::size_t kBlock = 4096;
}

bool sampled_member(const RandomModel& model, u64 n) {
  const u64 threshold = kernels::probability_threshold(model.membership_probability(n));
  return kernels::uniform_bits(kernels::seed_key(model.seed()), n) < threshold;
}

PowerSet sample_set(const RandomModel& model, u64 x_max, const SampleOptions& options) {
  const unsigned k = model.k();
  const u64 top = iroot(x_max, k);
  const u64 key = kernels::seed_key(model.seed());
  std::vector<std::uint8_t> keep(top, 0);

  const std::size_t blocks = static_cast<std::size_t>((top + kBlock - 1) / kBlock);
  parallel_blocks(blocks, options.threads, [&](std::size_t b0, std::size_t b1, unsigned) {
    std::vector<u64> values(kBlock), thresholds(kBlock);
    for (std::size_t b = b0; b < b1; ++b) {
      const u64 first = b * kBlock + 1;
      const u64 last = std::min<u64>(top, first + kBlock - 1);
      const std::size_t len = static_cast<std::size_t>(last - first + 1);
      for (std::size_t i = 0; i < len; ++i) {
        u64 value = checked_pow(first + i, k);
        values[i] = value;
        thresholds[i] = kernels::probability_threshold(model.membership_probability(value));
      }
      kernels::bernoulli(key, std::span<const u64>(values.data(), len),
                         std::span<const u64>(thresholds.data(), len),
                         std::span<std::uint8_t>(keep.data() + (first - 1), len), options.isa);
    }
  });

  std::vector<u64> roots;
  for (u64 m = 1; m <= top; ++m) {
    if (keep[m - 1]) roots.push_back(m);
  }
  return PowerSet(k, std::move(roots));
}

}  // namespace sidonpow
