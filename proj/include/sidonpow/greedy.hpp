#pragma once

#include <optional>

#include "sidonpow/power_set.hpp"

namespace sidonpow {

struct GreedyResult {
  PowerSet set;
  /// least-squares slope of log A(x) vs log x, when the set spans enough of
  /// the range to fit
  std::optional<double> density_exponent;
};

/// Walks the k-th powers up to x_max in increasing order and keeps a
/// candidate iff every weak h-fold sum stays at most g. Uses an incremental
/// table of weak j-fold sums (j <= h), touching only sums that contain the
/// candidate. Sequential by nature.
GreedyResult greedy_bounded_subset(unsigned k, unsigned h, unsigned g, u64 x_max);

}  // namespace sidonpow
