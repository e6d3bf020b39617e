#include "sidonpow/greedy.hpp"

#include <cstdint>
#include <vector>

#include "sidonpow/density.hpp"
#include "sidonpow/fit.hpp"

namespace sidonpow {

GreedyResult greedy_bounded_subset(unsigned k, unsigned h, unsigned g, u64 x_max) {
  if (h < 2) throw ArgumentError("greedy_bounded_subset: h must be >= 2");
  if (g < 1) throw ArgumentError("greedy_bounded_subset: g must be >= 1");
  if (k < 1) throw ArgumentError("greedy_bounded_subset: k must be >= 1");
  GreedyResult result{PowerSet(k, {}), std::nullopt};
  if (x_max < 1) return result;

  const u64 top = iroot(x_max, k);
  const u64 max_value = checked_pow(top, k);
  const std::size_t width = static_cast<std::size_t>(checked_mul(max_value, h)) + 1;
  if (checked_mul(width, h + 1) > (u64{1} << 27)) {
    throw ResourceError("greedy_bounded_subset: weak-sum table for x_max=" +
                        std::to_string(x_max) + " exceeds the 1 GiB budget");
  }

  // weak[j][s]: number of weak j-fold sums equal to s over the accepted set
  std::vector<std::vector<std::uint64_t>> weak(h + 1, std::vector<std::uint64_t>(width, 0));
  weak[0][0] = 1;
  std::vector<std::uint64_t> fresh(width, 0);
  std::vector<u64> roots;

  for (u64 m = 1; m <= top; ++m) {
    const std::size_t v = static_cast<std::size_t>(checked_pow(m, k));
    // accepted elements are all < v, so j-fold sums with the candidate stay
    // within [v, j*v]
    const std::size_t hi = h * v;
    auto added_sums = [&](unsigned j, std::size_t s) {
      std::uint64_t total = 0;
      for (unsigned t = 1; t <= j && t * v <= s; ++t) total += weak[j - t][s - t * v];
      return total;
    };
    bool accept = true;
    for (std::size_t s = v; s <= hi; ++s) {
      if (weak[h][s] + added_sums(h, s) > g) {
        accept = false;
        break;
      }
    }
    if (!accept) continue;
    roots.push_back(m);
    // update the higher orders first so each reads the old lower table
    for (unsigned j = h; j >= 1; --j) {
      const std::size_t top_sum = j * v;
      for (std::size_t s = v; s <= top_sum; ++s) fresh[s] = added_sums(j, s);
      for (std::size_t s = v; s <= top_sum; ++s) weak[j][s] += fresh[s];
    }
  }

  result.set = PowerSet(k, std::move(roots));
  const auto grid = geometric_grid(1, x_max);
  if (grid.size() >= 3 && !result.set.empty()) {
    try {
      result.density_exponent = fit_density_exponent(result.set, grid).exponent;
    } catch (const FitError&) {
    }
  }
  return result;
}

}  // namespace sidonpow
