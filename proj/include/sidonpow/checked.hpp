#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "sidonpow/errors.hpp"

namespace sidonpow {

using u64 = std::uint64_t;

/// Largest target accepted by the counting routines; sums of parts bounded by
/// a target never exceed it, and two such targets still add without wrapping.
inline constexpr u64 kMaxTarget = u64{1} << 62;

inline std::optional<u64> try_add(u64 a, u64 b) noexcept {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<u64> try_mul(u64 a, u64 b) noexcept {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline u64 checked_add(u64 a, u64 b) {
  auto r = try_add(a, b);
  if (!r) throw RangeError("integer overflow in addition");
  return *r;
}

inline u64 checked_mul(u64 a, u64 b) {
  auto r = try_mul(a, b);
  if (!r) throw RangeError("integer overflow in multiplication");
  return *r;
}

/// base^exp, or nullopt when the result does not fit in 64 bits.
inline std::optional<u64> try_pow(u64 base, unsigned exp) noexcept {
  u64 result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = try_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

inline u64 checked_pow(u64 base, unsigned exp) {
  auto r = try_pow(base, exp);
  if (!r) {
    throw RangeError(std::to_string(base) + "^" + std::to_string(exp) +
                     " exceeds 64 bits");
  }
  return *r;
}

/// floor(n^(1/k)) for k >= 1.
inline u64 iroot(u64 n, unsigned k) {
  if (k == 0) throw ArgumentError("iroot: k must be >= 1");
  if (k == 1 || n < 2) return n;
  auto guess = static_cast<u64>(std::pow(static_cast<long double>(n), 1.0L / k));
  auto fits = [&](u64 m) {
    auto p = try_pow(m, k);
    return p && *p <= n;
  };
  while (guess > 0 && !fits(guess)) --guess;
  while (fits(guess + 1)) ++guess;
  return guess;
}

/// True when n = m^k for some integer m >= 1.
inline bool is_perfect_power(u64 n, unsigned k) {
  if (n == 0) return false;
  u64 m = iroot(n, k);
  auto p = try_pow(m, k);
  return p && *p == n;
}

}  // namespace sidonpow
