#include "sidonpow/density.hpp"

#include <algorithm>
#include <cmath>

#include "sidonpow/fit.hpp"

namespace sidonpow {

u64 count_up_to(const PowerSet& set, u64 x) {
  auto values = set.values();
  return static_cast<u64>(std::upper_bound(values.begin(), values.end(), x) - values.begin());
}

DensityFit fit_density_exponent(const PowerSet& set, std::span<const u64> x_grid) {
  if (x_grid.size() < 3) throw ArgumentError("density fit needs at least 3 grid points");
  DensityFit fit;
  std::vector<double> xs, ys;
  for (u64 x : x_grid) {
    u64 a = count_up_to(set, x);
    if (a == 0) {
      fit.dropped.push_back(x);
      continue;
    }
    xs.push_back(std::log(static_cast<double>(x)));
    ys.push_back(std::log(static_cast<double>(a)));
  }
  if (xs.size() < 2) throw FitError("density fit: A(x) is zero on the grid");
  LineFit line = fit_line(xs, ys);
  fit.exponent = line.slope;
  fit.intercept = line.intercept;
  fit.residual = line.residual;
  return fit;
}

}  // namespace sidonpow
