#include "sidonpow/profile.hpp"

#include <algorithm>
#include <numeric>

#include "sidonpow/parallel.hpp"

namespace sidonpow {

RepCountProfile::RepCountProfile(unsigned k, unsigned h, std::string domain, u64 lo, u64 hi)
    : k_(k), h_(h), domain_(std::move(domain)), lo_(lo), hi_(hi) {
  if (lo < 1 || lo > hi) throw ArgumentError("profile range must satisfy 1 <= lo <= hi");
  std::size_t span = static_cast<std::size_t>(hi - lo + 1);
  strict_.assign(span, 0);
  weak_.assign(span, 0);
}

namespace {

using Counts = std::vector<std::uint32_t>;

struct Accumulator {
  Counts strict, weak;
  explicit Accumulator(std::size_t span) : strict(span, 0), weak(span, 0) {}
};

constexpr std::size_t kInterleave = 8;

void merge_into(RepCountProfile& profile, std::vector<Accumulator>& partial) {
  auto& strict = profile.strict_counts();
  auto& weak = profile.weak_counts();
  for (auto& acc : partial) {
    for (std::size_t i = 0; i < strict.size(); ++i) {
      strict[i] += acc.strict[i];
      weak[i] += acc.weak[i];
    }
  }
}

unsigned workers_within_budget(const ProfileOptions& options, u64 span, u64 extra_bytes) {
  const u64 per_worker = span * 2 * sizeof(std::uint32_t);
  const u64 base = per_worker + extra_bytes;
  if (base > options.max_bytes) {
    u64 max_span = options.max_bytes / (2 * sizeof(std::uint32_t));
    u64 pieces = (span + max_span - 1) / std::max<u64>(max_span, 1);
    throw ResourceError("profile range of " + std::to_string(span) +
                        " integers exceeds the memory budget of " +
                        std::to_string(options.max_bytes) + " bytes; split the range into " +
                        std::to_string(pieces) + " pieces of at most " +
                        std::to_string(max_span) + " integers");
  }
  unsigned workers = std::max(1u, options.threads);
  // every extra worker needs its own count arrays
  while (workers > 1 && base + per_worker * workers > options.max_bytes) --workers;
  return workers;
}

void sweep(RepCountProfile& profile, std::span<const u64> values, unsigned h,
           const ProfileOptions& options) {
  const u64 lo = profile.lo(), hi = profile.hi();
  const std::size_t span = profile.strict_counts().size();
  unsigned workers = workers_within_budget(options, span, 0);
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(
                                            1, (values.size() + kInterleave - 1) / kInterleave)));
  std::vector<Accumulator> partial;
  partial.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) partial.emplace_back(span);

  run_workers(workers, [&](unsigned w) {
    auto& acc = partial[w];
    for (std::size_t begin = w * kInterleave; begin < values.size();
         begin += static_cast<std::size_t>(workers) * kInterleave) {
      if (values[begin] > hi) break;
      detail::for_each_tuple(values, h, lo, hi, begin, begin + kInterleave,
                             [&](std::span<const std::size_t> idx, bool distinct) {
                               u64 s = 0;
                               for (auto i : idx) s += values[i];
                               auto off = static_cast<std::size_t>(s - lo);
                               ++acc.weak[off];
                               if (distinct) ++acc.strict[off];
                             });
    }
  });
  merge_into(profile, partial);
}

struct Half {
  u64 sum;
  std::size_t edge;
  bool distinct;
};

void meet_in_the_middle(RepCountProfile& profile, std::span<const u64> values, unsigned h,
                        const ProfileOptions& options) {
  const u64 lo = profile.lo(), hi = profile.hi();
  const std::size_t span = profile.strict_counts().size();
  const unsigned low_parts = (h + 1) / 2;
  const unsigned high_parts = h / 2;

  auto collect = [&](unsigned parts, bool keep_last) {
    std::vector<Half> out;
    detail::for_each_tuple(values, parts, 0, hi, 0, values.size(),
                           [&](std::span<const std::size_t> idx, bool distinct) {
                             u64 s = 0;
                             for (auto i : idx) s += values[i];
                             out.push_back({s, keep_last ? idx.back() : idx.front(), distinct});
                             if (out.size() * sizeof(Half) > options.max_bytes) {
                               throw ResourceError(
                                   "meet-in-the-middle half table exceeds the memory budget; "
                                   "lower hi or use the sweep strategy");
                             }
                           });
    return out;
  };
  std::vector<Half> low = collect(low_parts, true);
  std::vector<Half> high = collect(high_parts, false);

  // bucket the high halves by first index, each bucket sorted by sum
  std::sort(high.begin(), high.end(), [](const Half& a, const Half& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.sum < b.sum;
  });
  std::vector<std::size_t> bucket_start(values.size() + 1, high.size());
  for (std::size_t i = high.size(); i-- > 0;) bucket_start[high[i].edge] = i;
  for (std::size_t j = values.size(); j-- > 0;) {
    bucket_start[j] = std::min(bucket_start[j], bucket_start[j + 1]);
  }

  const u64 table_bytes = (low.size() + high.size()) * sizeof(Half);
  unsigned workers = workers_within_budget(options, span, table_bytes);
  workers = std::min<unsigned>(workers,
                               static_cast<unsigned>(std::max<std::size_t>(1, low.size())));
  std::vector<Accumulator> partial;
  partial.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) partial.emplace_back(span);

  parallel_blocks(low.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    auto& acc = partial[w];
    for (std::size_t t = begin; t < end; ++t) {
      const Half& a = low[t];
      const u64 room = hi - a.sum;
      const u64 need = a.sum >= lo ? 0 : lo - a.sum;
      for (std::size_t j = a.edge; j < values.size(); ++j) {
        auto floor_sum = try_mul(values[j], high_parts);
        if (!floor_sum || *floor_sum > room) break;
        auto first = high.begin() + static_cast<std::ptrdiff_t>(bucket_start[j]);
        auto last = high.begin() + static_cast<std::ptrdiff_t>(bucket_start[j + 1]);
        first = std::lower_bound(first, last, need,
                                 [](const Half& x, u64 v) { return x.sum < v; });
        for (auto it = first; it != last && it->sum <= room; ++it) {
          auto off = static_cast<std::size_t>(a.sum + it->sum - lo);
          ++acc.weak[off];
          if (a.distinct && it->distinct && j > a.edge) ++acc.strict[off];
        }
      }
    }
  });
  merge_into(profile, partial);
}

}  // namespace

RepCountProfile representation_profile(u64 lo, u64 hi, unsigned h, const Domain& domain,
                                       const ProfileOptions& options) {
  if (h < 2) throw ArgumentError("h must be >= 2");
  if (lo < 1 || lo > hi) throw ArgumentError("profile range must satisfy 1 <= lo <= hi");
  if (hi > kMaxTarget) throw RangeError("profile upper bound exceeds the supported maximum");
  RepCountProfile profile(domain.k(), h, domain.label(), lo, hi);
  PowerSet set = domain.materialize(hi);

  bool use_mitm = false;
  switch (options.strategy) {
    case ProfileStrategy::sweep: break;
    case ProfileStrategy::meet_in_the_middle: use_mitm = true; break;
    case ProfileStrategy::automatic:
      use_mitm = h >= options.mitm_min_h || (hi - lo + 1) > options.mitm_min_range;
      break;
  }
  if (use_mitm) {
    meet_in_the_middle(profile, set.values(), h, options);
  } else {
    sweep(profile, set.values(), h, options);
  }
  return profile;
}

}  // namespace sidonpow
