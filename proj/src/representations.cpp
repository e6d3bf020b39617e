#include "sidonpow/representations.hpp"

#include <algorithm>
#include <string>

namespace sidonpow {

namespace detail {

void check_target(u64 n, unsigned h) {
  if (h < 2) throw ArgumentError("h must be >= 2, got " + std::to_string(h));
  if (n < 1) throw ArgumentError("target n must be >= 1");
  if (n > kMaxTarget) {
    throw RangeError("target " + std::to_string(n) + " exceeds the supported maximum " +
                     std::to_string(kMaxTarget));
  }
}

}  // namespace detail

namespace {

// Depth-first search over non-decreasing index tuples with value sum exactly
// n; the last part is located by binary search.
template <typename Emit>
void search_exact(std::span<const u64> values, unsigned h, u64 n, bool strict, Emit&& emit) {
  std::vector<std::size_t> idx(h);
  auto rec = [&](auto&& self, unsigned depth, std::size_t start, u64 remaining) -> void {
    unsigned left = h - depth;
    if (start >= values.size()) return;
    if (left == 1) {
      auto it = std::lower_bound(values.begin() + static_cast<std::ptrdiff_t>(start),
                                 values.end(), remaining);
      if (it != values.end() && *it == remaining) {
        idx[depth] = static_cast<std::size_t>(it - values.begin());
        emit(std::span<const std::size_t>(idx));
      }
      return;
    }
    for (std::size_t i = start; i < values.size(); ++i) {
      auto floor_sum = try_mul(values[i], left);
      if (!floor_sum || *floor_sum > remaining) break;
      idx[depth] = i;
      self(self, depth + 1, strict ? i + 1 : i, remaining - values[i]);
    }
  };
  rec(rec, 0, 0, n);
}

}  // namespace

std::vector<Representation> enumerate_representations(u64 n, unsigned h, const Domain& domain,
                                                       Ordering ordering) {
  detail::check_target(n, h);
  PowerSet set = domain.materialize(n);
  auto values = set.values();
  auto roots = set.roots();
  std::vector<Representation> out;
  search_exact(values, h, n, ordering == Ordering::strict, [&](std::span<const std::size_t> idx) {
    Representation rep{n, {}, ordering};
    rep.parts.reserve(idx.size());
    for (std::size_t i : idx) rep.parts.push_back(roots[i]);
    out.push_back(std::move(rep));
  });
  return out;
}

u64 count_representations_dfs(u64 n, unsigned h, const Domain& domain, Ordering ordering) {
  detail::check_target(n, h);
  PowerSet set = domain.materialize(n);
  u64 count = 0;
  search_exact(set.values(), h, n, ordering == Ordering::strict,
               [&](std::span<const std::size_t>) { ++count; });
  return count;
}

namespace {

struct HalfTuple {
  u64 sum;
  std::size_t edge;  // last index for the low half, first index for the high half
};

}  // namespace

u64 count_representations_mitm(u64 n, unsigned h, const Domain& domain, Ordering ordering) {
  detail::check_target(n, h);
  PowerSet set = domain.materialize(n);
  auto values = set.values();
  const bool strict = ordering == Ordering::strict;
  const unsigned low_parts = (h + 1) / 2;
  const unsigned high_parts = h / 2;

  std::vector<HalfTuple> low, high;
  detail::for_each_tuple(values, low_parts, 0, n, 0, values.size(),
                         [&](std::span<const std::size_t> idx, bool distinct) {
                           if (strict && !distinct) return;
                           u64 s = 0;
                           for (auto i : idx) s += values[i];
                           low.push_back({s, idx.back()});
                         });
  detail::for_each_tuple(values, high_parts, 0, n, 0, values.size(),
                         [&](std::span<const std::size_t> idx, bool distinct) {
                           if (strict && !distinct) return;
                           u64 s = 0;
                           for (auto i : idx) s += values[i];
                           high.push_back({s, idx.front()});
                         });
  std::sort(high.begin(), high.end(), [](const HalfTuple& a, const HalfTuple& b) {
    return a.sum != b.sum ? a.sum < b.sum : a.edge < b.edge;
  });

  u64 count = 0;
  for (const auto& t : low) {
    u64 need = n - t.sum;
    auto first = std::lower_bound(high.begin(), high.end(), HalfTuple{need, 0},
                                  [](const HalfTuple& a, const HalfTuple& b) {
                                    return a.sum != b.sum ? a.sum < b.sum : a.edge < b.edge;
                                  });
    auto last = std::upper_bound(first, high.end(), need,
                                 [](u64 s, const HalfTuple& a) { return s < a.sum; });
    // high-half tuples must start after (strict) or at (weak) the low half's end
    std::size_t min_edge = strict ? t.edge + 1 : t.edge;
    auto from = std::lower_bound(first, last, min_edge,
                                 [](const HalfTuple& a, std::size_t e) { return a.edge < e; });
    count += static_cast<u64>(last - from);
  }
  return count;
}

u64 count_representations(u64 n, unsigned h, const Domain& domain, Ordering ordering,
                          const CountOptions& options) {
  if (h >= options.mitm_min_h) return count_representations_mitm(n, h, domain, ordering);
  return count_representations_dfs(n, h, domain, ordering);
}

}  // namespace sidonpow
