#pragma once

#include <cstdint>
#include <optional>

#include "sidonpow/power_set.hpp"
#include "sidonpow/profile.hpp"

namespace sidonpow {

/// Outcome of a B_h[g] check over [1, n_max].
struct BhgVerdict {
  bool ok = true;
  /// first n with R*_{A,h}(n) > g, and that count
  std::optional<u64> violation_n;
  std::uint32_t violation_count = 0;
};

/// Scans n in [1, n_max] for the first weak count exceeding g.
BhgVerdict verify_bhg(const PowerSet& set, unsigned h, unsigned g, u64 n_max,
                      const ProfileOptions& options = {});

/// (h * g * x * h!)^(1/h) + h - 1, the ceiling on A(x) for a B_h[g] set.
double sidon_counting_bound(unsigned h, unsigned g, double x);

}  // namespace sidonpow
