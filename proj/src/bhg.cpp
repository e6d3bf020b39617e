#include "sidonpow/bhg.hpp"

#include <cmath>

namespace sidonpow {

BhgVerdict verify_bhg(const PowerSet& set, unsigned h, unsigned g, u64 n_max,
                      const ProfileOptions& options) {
  if (h < 2) throw ArgumentError("verify_bhg: h must be >= 2");
  if (g < 1) throw ArgumentError("verify_bhg: g must be >= 1");
  BhgVerdict verdict;
  if (set.empty() || n_max < 1) return verdict;
  auto profile = representation_profile(1, n_max, h, Domain::of(set.restricted_to(n_max)), options);
  const auto& weak = profile.weak_counts();
  for (std::size_t i = 0; i < weak.size(); ++i) {
    if (weak[i] > g) {
      verdict.ok = false;
      verdict.violation_n = static_cast<u64>(i) + 1;
      verdict.violation_count = weak[i];
      break;
    }
  }
  return verdict;
}

double sidon_counting_bound(unsigned h, unsigned g, double x) {
  if (h < 2) throw ArgumentError("sidon_counting_bound: h must be >= 2");
  if (g < 1) throw ArgumentError("sidon_counting_bound: g must be >= 1");
  if (!(x >= 1.0)) throw ArgumentError("sidon_counting_bound: x must be >= 1");
  double factorial = 1.0;
  for (unsigned i = 2; i <= h; ++i) factorial *= i;
  return std::pow(static_cast<double>(h) * g * x * factorial, 1.0 / h) + (h - 1.0);
}

}  // namespace sidonpow
