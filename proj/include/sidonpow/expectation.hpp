#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sidonpow/fit.hpp"
#include "sidonpow/random_model.hpp"

namespace sidonpow {

/// E[R_{A,l}(n)]: sum over strict representations x_1 < ... < x_l of n by
/// k-th powers of prod alpha_{x_i}.
double expected_representation_count(const RandomModel& model, u64 n, unsigned l);

struct ExpectedCount {
  /// sum of alpha_{m^k} over m <= floor(x^(1/k))
  double exact = 0.0;
  /// leading term of the integral approximation; absent for table models
  std::optional<double> closed_form;
};

ExpectedCount expected_count(const RandomModel& model, u64 x);

struct DecayPoint {
  u64 n;
  double expectation;
};

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<DecayPoint> points;  // every grid point, zeros included
  std::vector<u64> dropped;        // grid points with zero expectation
};

/// Least-squares slope of log E[R_{A,l}(n)] against log n over the grid
/// points with nonzero expectation.
DecayFit expectation_decay_fit(const RandomModel& model, unsigned l, std::span<const u64> n_grid);

}  // namespace sidonpow
