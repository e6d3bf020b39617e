#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sidonpow/random_model.hpp"

namespace sidonpow {

/// 2 * exp(-min(delta^2/4, delta/2) * mean): the two-sided Chernoff bound for
/// a sum of independent Boolean variables with the given mean.
double chernoff_bound(double delta, double mean);

/// delta = sqrt(8 log x / E), which turns the Chernoff bound into 2/x^2
/// whenever delta <= 2.
double concentration_delta(double x, double mean);

struct ConcentrationReport {
  u64 x = 0;
  std::size_t trials = 0;
  double delta = 0.0;
  double expected = 0.0;
  std::size_t violations = 0;
  double violation_fraction = 0.0;
  double chernoff_bound = 0.0;
  double inverse_square_bound = 0.0;  // 2 / x^2
  double max_abs_deviation = 0.0;
  /// delta >= 2: the bound is outside the regime where it reduces to 2/x^2
  bool flagged = false;
  std::vector<u64> seeds;
  std::vector<u64> counts;  // A(x) per seed, in seed order
};

struct ConcentrationOptions {
  unsigned threads = 1;
};

/// Samples the model once per seed, computes A(x), and counts the seeds with
/// |A(x) - E[A(x)]| >= delta * E[A(x)].
ConcentrationReport concentration_trial(const RandomModel& model, u64 x,
                                        std::span<const u64> seeds,
                                        const ConcentrationOptions& options = {});

}  // namespace sidonpow
