#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "sidonpow/power_set.hpp"

namespace sidonpow {

/// strict: a_1 < ... < a_h (R); weak: a_1 <= ... <= a_h (R*).
enum class Ordering { strict, weak };

/// One solution of y_1^k + ... + y_h^k = n; parts are roots, non-decreasing.
struct Representation {
  u64 n = 0;
  std::vector<u64> parts;
  Ordering ordering = Ordering::weak;

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct CountOptions {
  /// count_representations switches to meet-in-the-middle at this h.
  unsigned mitm_min_h = 4;
};

/// All representations of n as a sum of h parts from the domain, in
/// lexicographic order of parts.
std::vector<Representation> enumerate_representations(u64 n, unsigned h, const Domain& domain,
                                                       Ordering ordering);

/// Number of representations; agrees with enumerate_representations().size().
u64 count_representations(u64 n, unsigned h, const Domain& domain, Ordering ordering,
                          const CountOptions& options = {});

/// Pruned depth-first count.
u64 count_representations_dfs(u64 n, unsigned h, const Domain& domain, Ordering ordering);

/// Meet-in-the-middle count: ceil(h/2) smallest parts joined against a sorted
/// table of the floor(h/2) largest parts.
u64 count_representations_mitm(u64 n, unsigned h, const Domain& domain, Ordering ordering);

namespace detail {

void check_target(u64 n, unsigned h);

/// Calls visit(indices, distinct) for every non-decreasing index tuple of
/// length `parts` whose value sum lies in [lo, hi]; `distinct` reports whether
/// the tuple is strictly increasing. Tuples are visited in lexicographic order.
template <typename Visit>
void for_each_tuple(std::span<const u64> values, unsigned parts, u64 lo, u64 hi,
                    std::size_t first_begin, std::size_t first_end, Visit&& visit) {
  std::vector<std::size_t> idx(parts);
  auto rec = [&](auto&& self, unsigned depth, std::size_t start, std::size_t end, u64 sum,
                 bool distinct) -> void {
    unsigned remaining = parts - depth;
    for (std::size_t i = start; i < end; ++i) {
      // every later part is >= values[i]
      auto floor_sum = try_mul(values[i], remaining);
      if (!floor_sum || *floor_sum > hi - sum) break;
      idx[depth] = i;
      bool d = distinct && (depth == 0 || i > idx[depth - 1]);
      u64 s = sum + values[i];
      if (remaining == 1) {
        if (s >= lo) visit(std::span<const std::size_t>(idx), d);
      } else {
        self(self, depth + 1, i, values.size(), s, d);
      }
    }
  };
  if (parts == 0) return;
  rec(rec, 0, first_begin, std::min(first_end, values.size()), 0, true);
}

}  // namespace detail

}  // namespace sidonpow
