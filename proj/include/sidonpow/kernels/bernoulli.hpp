#pragma once

// Counter-based Bernoulli membership kernels.
//
// The decision for integer n under seed s is
//   uniform_bits(seed_key(s), n) < probability_threshold(alpha_n)
// where uniform_bits is a 53-bit hash output. Every variant below computes
// exactly this predicate; they differ only in instruction set.

#include <cstdint>
#include <span>
#include <string_view>

namespace sidonpow::kernels {

using u64 = std::uint64_t;

/// SplitMix64 finalizer.
constexpr u64 mix64(u64 z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr u64 kGolden = 0x9e3779b97f4a7c15ULL;

constexpr u64 seed_key(u64 seed) noexcept { return mix64(seed ^ 0x5851f42d4c957f2dULL); }

/// 53 uniform bits for integer n.
constexpr u64 uniform_bits(u64 key, u64 n) noexcept { return mix64(key + n * kGolden) >> 11; }

inline constexpr u64 kUnit = u64{1} << 53;

/// ceil(alpha * 2^53), clamped to [0, 2^53]; bits < threshold happens with
/// probability alpha (to 2^-53).
u64 probability_threshold(double alpha) noexcept;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
/// Widest variant supported by the running CPU.
Isa best_isa() noexcept;

/// out[i] = uniform_bits(key, values[i]) < thresholds[i] ? 1 : 0.
void bernoulli_scalar(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
                      std::span<std::uint8_t> out) noexcept;

/// Dispatches to the requested variant; falls back to scalar when the
/// variant is unavailable.
void bernoulli(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
               std::span<std::uint8_t> out, Isa isa) noexcept;
void bernoulli(u64 key, std::span<const u64> values, std::span<const u64> thresholds,
               std::span<std::uint8_t> out) noexcept;

}  // namespace sidonpow::kernels
