#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidonpow/packing.hpp"
#include "sidonpow/profile.hpp"

namespace sidonpow {

struct WindowStats {
  u64 lo = 0, hi = 0;
  std::uint32_t max_r = 0;               // max of R_{A,h}(n) over the window
  std::vector<std::size_t> max_f;        // max of f_l(n), l = 2..h
  double packing_bound = 0.0;            // (max_l max_f_l)^h * h!
  bool cross_check_ok = true;            // max_r <= packing_bound
  bool greedy_fallback = false;          // some f_l came from the greedy bound
};

struct BoundednessReport {
  unsigned h = 0;
  u64 n_max = 0;
  std::vector<WindowStats> windows;
  bool all_cross_checks_ok = true;
  /// window maxima of R are non-decreasing and end higher than they start
  bool growth_observed = false;

  /// "no growth observed" or "growth observed"; a finite scan is evidence
  /// only, never a proof of boundedness.
  std::string verdict() const;
};

struct ScanOptions {
  ProfileOptions profile;
  std::size_t packing_cap = kDefaultPackingCap;
  unsigned threads = 1;
};

/// Splits [1, n_max] into window_count equal windows and reports per-window
/// maxima of R_{A,h}(n) and f_l(n) for 2 <= l <= h, with the packing
/// cross-check max R <= (max f)^h * h! per window.
BoundednessReport boundedness_scan(const PowerSet& set, unsigned h, u64 n_max,
                                   std::size_t window_count, const ScanOptions& options = {});

/// True when the sequence is non-decreasing and its last entry exceeds its
/// first.
bool is_monotone_growth(const std::vector<std::uint32_t>& maxima);

}  // namespace sidonpow
