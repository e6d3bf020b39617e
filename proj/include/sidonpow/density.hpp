#pragma once

#include <span>
#include <vector>

#include "sidonpow/power_set.hpp"

namespace sidonpow {

/// A(x): number of elements a <= x.
u64 count_up_to(const PowerSet& set, u64 x);

struct DensityFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  std::vector<u64> dropped;  // grid points with A(x) = 0
};

/// Least-squares slope of log A(x) against log x over the grid.
DensityFit fit_density_exponent(const PowerSet& set, std::span<const u64> x_grid);

}  // namespace sidonpow
