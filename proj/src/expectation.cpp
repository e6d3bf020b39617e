#include "sidonpow/expectation.hpp"

#include <cmath>

#include "sidonpow/representations.hpp"

namespace sidonpow {

double expected_representation_count(const RandomModel& model, u64 n, unsigned l) {
  if (l < 2) throw ArgumentError("l must be >= 2");
  auto reps = enumerate_representations(n, l, Domain::full(model.k()), Ordering::strict);
  CompensatedSum total;
  for (const auto& rep : reps) {
    double p = 1.0;
    for (u64 root : rep.parts) p *= model.membership_probability(checked_pow(root, model.k()));
    total.add(p);
  }
  return total.value();
}

ExpectedCount expected_count(const RandomModel& model, u64 x) {
  if (x < 1) throw ArgumentError("expected_count: x must be >= 1");
  const u64 top = iroot(x, model.k());
  CompensatedSum total;
  for (u64 m = 1; m <= top; ++m) {
    total.add(model.membership_probability(checked_pow(m, model.k())));
  }
  return {total.value(), model.closed_form_count(static_cast<double>(x))};
}

DecayFit expectation_decay_fit(const RandomModel& model, unsigned l, std::span<const u64> n_grid) {
  if (n_grid.size() < 3) throw ArgumentError("decay fit needs at least 3 grid points");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) throw ArgumentError("decay fit grid must be increasing");
  }
  DecayFit fit;
  std::vector<double> xs, ys;
  for (u64 n : n_grid) {
    double e = expected_representation_count(model, n, l);
    fit.points.push_back({n, e});
    if (e > 0.0) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(e));
    } else {
      fit.dropped.push_back(n);
    }
  }
  if (xs.size() < 2) {
    throw FitError("decay fit: fewer than two grid points have nonzero expectation");
  }
  LineFit line = fit_line(xs, ys);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  return fit;
}

}  // namespace sidonpow
