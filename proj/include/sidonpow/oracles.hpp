#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sidonpow/profile.hpp"

namespace sidonpow {

/// Literature value of the Landau-Ramanujan constant, for report context.
inline constexpr double kLandauRamanujan = 0.7642236535892206;

struct TwoSquaresCount {
  u64 count = 0;
  /// count * sqrt(log x) / x
  double normalized = 0.0;
};

/// Number of n in [1, x] with n = a^2 + b^2 for integers a, b >= 0, by
/// marking every a^2 + b^2 <= x.
TwoSquaresCount sum_two_squares_sieve(u64 x);

struct DivisorCheck {
  u64 weak_count = 0;     // R*_{(Z+)^k,2}(n)
  u64 divisor_count = 0;  // d(n)
  bool ok = false;        // weak_count <= divisor_count
  /// at most one representation a <= b for each value of a + b, and a + b
  /// always divides n
  bool unique_per_divisor = false;
};

/// Number of positive divisors by trial division.
u64 divisor_count(u64 n);

/// For odd k: compares the number of representations n = a^k + b^k with the
/// divisor count and checks the one-per-divisor property.
DivisorCheck divisor_bound_check(unsigned k, u64 n);

struct ScanHit {
  u64 n;
  std::uint32_t count;
  friend bool operator==(const ScanHit&, const ScanHit&) = default;
};

/// Every n <= x_max with R*_{(Z+)^k,2}(n) >= threshold, ascending.
std::vector<ScanHit> taxicab_scan(unsigned k, u64 x_max, unsigned threshold,
                                  const ProfileOptions& options = {});

struct HypothesisKReport {
  double max_ratio = 0.0;  // max R(n) / n^eta
  u64 worst_n = 0;
  std::vector<ScanHit> violations;  // R(n) >= n^eta
};

/// Strict counts R_{(Z+)^k,h}(n) over [n_min, n_max] compared with n^eta.
HypothesisKReport hypothesis_k_scan(unsigned k, unsigned h, u64 n_max, double eta,
                                    u64 n_min = 2, const ProfileOptions& options = {});

}  // namespace sidonpow
