#include "sidonpow/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "sidonpow/density.hpp"
#include "sidonpow/expectation.hpp"
#include "sidonpow/parallel.hpp"
#include "sidonpow/sampling.hpp"

namespace sidonpow {

double chernoff_bound(double delta, double mean) {
  if (!(delta > 0.0)) throw ArgumentError("chernoff_bound: delta must be positive");
  return 2.0 * std::exp(-std::min(delta * delta / 4.0, delta / 2.0) * mean);
}

double concentration_delta(double x, double mean) {
  if (!(mean > 0.0)) throw ArgumentError("concentration_delta: mean must be positive");
  return std::sqrt(8.0 * std::log(x) / mean);
}

ConcentrationReport concentration_trial(const RandomModel& model, u64 x,
                                        std::span<const u64> seeds,
                                        const ConcentrationOptions& options) {
  if (seeds.size() < 10) throw ArgumentError("concentration_trial needs at least 10 seeds");
  if (x < 2) throw ArgumentError("concentration_trial needs x >= 2");
  ConcentrationReport report;
  report.x = x;
  report.trials = seeds.size();
  report.expected = expected_count(model, x).exact;
  if (!(report.expected > 0.0)) {
    throw ArgumentError("concentration_trial: E[A(x)] must be positive");
  }
  const double xd = static_cast<double>(x);
  report.delta = concentration_delta(xd, report.expected);
  report.flagged = report.delta >= 2.0;
  report.chernoff_bound = chernoff_bound(report.delta, report.expected);
  report.inverse_square_bound = 2.0 / (xd * xd);
  report.seeds.assign(seeds.begin(), seeds.end());
  report.counts.assign(seeds.size(), 0);

  parallel_blocks(seeds.size(), options.threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
      PowerSet sample = sample_set(model.with_seed(seeds[i]), x);
      report.counts[i] = count_up_to(sample, x);
    }
  });

  const double threshold = report.delta * report.expected;
  for (u64 c : report.counts) {
    double dev = std::abs(static_cast<double>(c) - report.expected);
    report.max_abs_deviation = std::max(report.max_abs_deviation, dev);
    if (dev >= threshold) ++report.violations;
  }
  report.violation_fraction =
      static_cast<double>(report.violations) / static_cast<double>(report.trials);
  return report;
}

}  // namespace sidonpow
