#include "sidonpow/box_count.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sidonpow {

u64 count_solutions_in_box(u64 n, unsigned k, std::span<const u64> bounds) {
  if (bounds.empty()) throw ArgumentError("box count needs at least one bound");
  if (k < 1) throw ArgumentError("k must be >= 1");
  for (u64 p : bounds) {
    if (p < 1) throw ArgumentError("box bounds must be >= 1");
  }
  const std::size_t l = bounds.size();
  // smallest achievable sum of the coordinates after position i
  std::vector<u64> tail_floor(l + 1, 0);
  for (std::size_t i = l; i-- > 0;) tail_floor[i] = checked_add(tail_floor[i + 1], 1);

  auto rec = [&](auto&& self, std::size_t i, u64 remaining) -> u64 {
    if (i + 1 == l) {
      if (!is_perfect_power(remaining, k)) return 0;
      return iroot(remaining, k) <= bounds[i] ? 1 : 0;
    }
    if (remaining < tail_floor[i]) return 0;
    u64 top = std::min(bounds[i], iroot(remaining - tail_floor[i + 1], k));
    u64 total = 0;
    for (u64 y = 1; y <= top; ++y) {
      total += self(self, i + 1, remaining - checked_pow(y, k));
    }
    return total;
  };
  return rec(rec, 0, n);
}

double box_count_bound_shape(u64 n, unsigned k, std::span<const u64> bounds) {
  if (bounds.empty() || n == 0) throw ArgumentError("box bound needs n >= 1 and bounds");
  double log_prod = 0.0;
  for (u64 p : bounds) log_prod += std::log(static_cast<double>(p));
  const double l = static_cast<double>(bounds.size());
  return std::exp(log_prod - std::log(static_cast<double>(n))) +
         std::exp(log_prod * (1.0 - static_cast<double>(k) / l));
}

}  // namespace sidonpow
