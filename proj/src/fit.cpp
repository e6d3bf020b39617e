#include "sidonpow/fit.hpp"

#include <algorithm>
#include <cmath>

namespace sidonpow {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("fit_line: size mismatch");
  if (x.size() < 2) throw FitError("fit_line: need at least two points");
  const double n = static_cast<double>(x.size());
  CompensatedSum sx, sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.value() / n, my = sy.value() / n;
  CompensatedSum sxx, sxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx.add((x[i] - mx) * (x[i] - mx));
    sxy.add((x[i] - mx) * (y[i] - my));
  }
  if (sxx.value() <= 0.0) throw FitError("fit_line: x values are all equal");
  LineFit fit;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  CompensatedSum rss;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - (fit.slope * x[i] + fit.intercept);
    rss.add(r * r);
  }
  fit.residual = std::sqrt(rss.value() / n);
  fit.points = x.size();
  return fit;
}

std::vector<u64> geometric_grid(u64 lo, u64 hi, unsigned per_decade) {
  if (lo < 1 || lo > hi) throw ArgumentError("geometric_grid: need 1 <= lo <= hi");
  if (per_decade < 1) throw ArgumentError("geometric_grid: per_decade must be >= 1");
  const double decades = std::log10(static_cast<double>(hi) / static_cast<double>(lo));
  const auto steps = static_cast<long>(std::floor(decades * per_decade + 1e-9));
  std::vector<u64> grid;
  for (long i = 0; i <= steps; ++i) {
    double v = std::round(static_cast<double>(lo) * std::pow(10.0, static_cast<double>(i) / per_decade));
    grid.push_back(std::min(hi, static_cast<u64>(v)));
  }
  grid.push_back(hi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace sidonpow
