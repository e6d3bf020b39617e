#include "sidonpow/boundedness.hpp"

#include <algorithm>
#include <cmath>

#include "sidonpow/parallel.hpp"

namespace sidonpow {

std::string BoundednessReport::verdict() const {
  return growth_observed ? "growth observed" : "no growth observed";
}

bool is_monotone_growth(const std::vector<std::uint32_t>& maxima) {
  if (maxima.size() < 2) return false;
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    if (maxima[i] < maxima[i - 1]) return false;
  }
  return maxima.back() > maxima.front();
}

BoundednessReport boundedness_scan(const PowerSet& set, unsigned h, u64 n_max,
                                   std::size_t window_count, const ScanOptions& options) {
  if (h < 2) throw ArgumentError("boundedness_scan: h must be >= 2");
  if (window_count < 2) throw ArgumentError("boundedness_scan: need at least 2 windows");
  if (n_max < window_count) throw ArgumentError("boundedness_scan: n_max below window count");

  const PowerSet local = set.restricted_to(n_max);
  const Domain domain = Domain::of(local);
  std::vector<RepCountProfile> profiles;
  for (unsigned l = 2; l <= h; ++l) {
    profiles.push_back(representation_profile(1, n_max, l, domain, options.profile));
  }

  BoundednessReport report;
  report.h = h;
  report.n_max = n_max;
  report.windows.resize(window_count);
  double h_factorial = 1.0;
  for (unsigned i = 2; i <= h; ++i) h_factorial *= i;

  parallel_blocks(window_count, options.threads, [&](std::size_t w0, std::size_t w1, unsigned) {
    for (std::size_t w = w0; w < w1; ++w) {
      WindowStats& win = report.windows[w];
      win.lo = static_cast<u64>(w) * n_max / window_count + 1;
      win.hi = static_cast<u64>(w + 1) * n_max / window_count;
      win.max_f.assign(h - 1, 0);
      for (unsigned l = 2; l <= h; ++l) {
        const auto& strict = profiles[l - 2].strict_counts();
        std::size_t& max_f = win.max_f[l - 2];
        for (u64 n = win.lo; n <= win.hi; ++n) {
          std::uint32_t r = strict[static_cast<std::size_t>(n - 1)];
          if (l == h) win.max_r = std::max(win.max_r, r);
          if (r <= max_f) continue;  // f_l(n) <= R_{A,l}(n)
          std::size_t f = r;
          if (r >= 2) {
            try {
              f = max_disjoint_representations(n, l, local, PackingMode::exact,
                                               options.packing_cap)
                      .f_value;
            } catch (const PackingCapExceeded& e) {
              f = e.greedy().f_value;
              win.greedy_fallback = true;
            }
          }
          max_f = std::max(max_f, f);
        }
      }
      std::size_t c_max = *std::max_element(win.max_f.begin(), win.max_f.end());
      win.packing_bound = std::pow(static_cast<double>(c_max), h) * h_factorial;
      win.cross_check_ok = static_cast<double>(win.max_r) <= win.packing_bound;
    }
  });

  std::vector<std::uint32_t> maxima;
  for (const auto& win : report.windows) {
    maxima.push_back(win.max_r);
    report.all_cross_checks_ok = report.all_cross_checks_ok && win.cross_check_ok;
  }
  report.growth_observed = is_monotone_growth(maxima);
  return report;
}

}  // namespace sidonpow
