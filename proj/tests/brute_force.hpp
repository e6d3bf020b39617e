#pragma once

// Unpruned reference enumerations used as test oracles. Nothing here calls
// into the library's counting code.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace brute {

using u64 = std::uint64_t;

inline u64 ipow(u64 b, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

inline u64 root_ceiling(u64 n, unsigned k) {
  u64 m = 1;
  while (ipow(m + 1, k) <= n) ++m;
  return m;
}

/// All non-decreasing (weak) or increasing (strict) root tuples from `roots`
/// whose k-th powers sum to n, lexicographic.
inline std::vector<std::vector<u64>> representations(u64 n, unsigned h, unsigned k,
                                                     const std::vector<u64>& roots, bool strict) {
  std::vector<std::vector<u64>> out;
  std::vector<u64> cur;
  std::function<void(std::size_t, u64)> rec = [&](std::size_t start, u64 sum) {
    if (cur.size() == h) {
      if (sum == n) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < roots.size(); ++i) {
      u64 v = ipow(roots[i], k);
      if (sum + v > n) continue;
      cur.push_back(roots[i]);
      rec(strict ? i + 1 : i, sum + v);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

inline std::vector<u64> all_roots(u64 n, unsigned k) {
  std::vector<u64> r;
  for (u64 m = 1; ipow(m, k) <= n; ++m) r.push_back(m);
  return r;
}

inline u64 count(u64 n, unsigned h, unsigned k, const std::vector<u64>& roots, bool strict) {
  return representations(n, h, k, roots, strict).size();
}

/// Ordered tuples in the box [1,P_1] x ... x [1,P_l], no pruning.
inline u64 box_count(u64 n, unsigned k, const std::vector<u64>& bounds) {
  u64 total = 0;
  std::vector<u64> y(bounds.size(), 1);
  while (true) {
    u64 s = 0;
    for (u64 v : y) s += ipow(v, k);
    if (s == n) ++total;
    std::size_t i = 0;
    while (i < y.size() && y[i] == bounds[i]) y[i++] = 1;
    if (i == y.size()) break;
    ++y[i];
  }
  return total;
}

/// Per-n test: is n = a^2 + b^2 with a, b >= 0?
inline bool is_sum_two_squares(u64 n) {
  for (u64 a = 0; a * a <= n; ++a) {
    u64 rest = n - a * a;
    u64 b = static_cast<u64>(std::sqrt(static_cast<double>(rest)));
    while (b * b > rest) --b;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return true;
  }
  return false;
}

}  // namespace brute
