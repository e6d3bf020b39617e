#include "sidonpow/oracles.hpp"

#include <cmath>
#include <map>

#include "sidonpow/representations.hpp"

namespace sidonpow {

TwoSquaresCount sum_two_squares_sieve(u64 x) {
  if (x < 2) throw ArgumentError("sum_two_squares_sieve: x must be >= 2");
  if (x > (u64{1} << 34)) throw ResourceError("sum_two_squares_sieve: x too large for a bitmap");
  std::vector<bool> marked(static_cast<std::size_t>(x) + 1, false);
  for (u64 a = 0; a * a <= x; ++a) {
    for (u64 b = a; a * a + b * b <= x; ++b) marked[static_cast<std::size_t>(a * a + b * b)] = true;
  }
  TwoSquaresCount out;
  for (u64 n = 1; n <= x; ++n) out.count += marked[static_cast<std::size_t>(n)] ? 1 : 0;
  const double xd = static_cast<double>(x);
  out.normalized = static_cast<double>(out.count) * std::sqrt(std::log(xd)) / xd;
  return out;
}

u64 divisor_count(u64 n) {
  if (n == 0) throw ArgumentError("divisor_count: n must be >= 1");
  u64 count = 0;
  for (u64 d = 1; d <= n / d; ++d) {
    if (n % d == 0) count += (d == n / d) ? 1 : 2;
  }
  return count;
}

DivisorCheck divisor_bound_check(unsigned k, u64 n) {
  if (k < 3 || k % 2 == 0) throw ArgumentError("divisor_bound_check: k must be odd and >= 3");
  if (n < 2) throw ArgumentError("divisor_bound_check: n must be >= 2");
  auto reps = enumerate_representations(n, 2, Domain::full(k), Ordering::weak);
  DivisorCheck out;
  out.weak_count = reps.size();
  out.divisor_count = divisor_count(n);
  out.ok = out.weak_count <= out.divisor_count;
  std::map<u64, std::size_t> per_sum;
  bool divides = true;
  for (const auto& r : reps) {
    u64 d = r.parts[0] + r.parts[1];
    divides = divides && n % d == 0;
    ++per_sum[d];
  }
  out.unique_per_divisor = divides;
  for (const auto& [d, c] : per_sum) out.unique_per_divisor = out.unique_per_divisor && c <= 1;
  return out;
}

std::vector<ScanHit> taxicab_scan(unsigned k, u64 x_max, unsigned threshold,
                                  const ProfileOptions& options) {
  if (k < 2) throw ArgumentError("taxicab_scan: k must be >= 2");
  if (threshold < 2) throw ArgumentError("taxicab_scan: threshold must be >= 2");
  std::vector<ScanHit> hits;
  if (x_max < 1) return hits;
  auto profile = representation_profile(1, x_max, 2, Domain::full(k), options);
  const auto& weak = profile.weak_counts();
  for (std::size_t i = 0; i < weak.size(); ++i) {
    if (weak[i] >= threshold) hits.push_back({static_cast<u64>(i) + 1, weak[i]});
  }
  return hits;
}

HypothesisKReport hypothesis_k_scan(unsigned k, unsigned h, u64 n_max, double eta, u64 n_min,
                                    const ProfileOptions& options) {
  if (h < 2) throw ArgumentError("hypothesis_k_scan: h must be >= 2");
  if (!(eta > 0.0)) throw ArgumentError("hypothesis_k_scan: eta must be positive");
  HypothesisKReport report;
  n_min = std::max<u64>(n_min, 1);
  if (n_max < n_min) return report;
  auto profile = representation_profile(n_min, n_max, h, Domain::full(k), options);
  const auto& strict = profile.strict_counts();
  for (std::size_t i = 0; i < strict.size(); ++i) {
    const u64 n = n_min + i;
    const double bound = std::pow(static_cast<double>(n), eta);
    const double ratio = strict[i] / bound;
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.worst_n = n;
    }
    if (static_cast<double>(strict[i]) >= bound) report.violations.push_back({n, strict[i]});
  }
  return report;
}

}  // namespace sidonpow
