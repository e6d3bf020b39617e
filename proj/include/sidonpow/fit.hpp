#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sidonpow/checked.hpp"

namespace sidonpow {

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Root-mean-square residual.
  double residual = 0.0;
  std::size_t points = 0;
};

/// Unweighted least-squares line y = slope * x + intercept; needs at least
/// two distinct x values.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Integers round(lo * 10^(i / per_decade)) in [lo, hi], deduplicated, with
/// hi always included.
std::vector<u64> geometric_grid(u64 lo, u64 hi, unsigned per_decade = 12);

}  // namespace sidonpow
