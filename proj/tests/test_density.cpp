#include <doctest.h>

#include <cmath>
#include <numeric>

#include "sidonpow/concentration.hpp"
#include "sidonpow/density.hpp"
#include "sidonpow/expectation.hpp"
#include "sidonpow/fit.hpp"
#include "sidonpow/sampling.hpp"

using namespace sidonpow;

TEST_CASE("count_up_to examples") {
  CHECK(count_up_to(PowerSet::full(2, 100), 100) == 10);
  CHECK(count_up_to(PowerSet::full(2, 100), 0) == 0);
  CHECK(count_up_to(PowerSet(2, {}), 1000) == 0);
  // a <= x: 1, 729 and 1000 itself
  CHECK(count_up_to(PowerSet(3, {1, 9, 10, 12}), 1000) == 3);
  CHECK(count_up_to(PowerSet(3, {1, 9, 10, 12}), 999) == 2);
}

TEST_CASE("count_up_to is the naive indicator sum and is monotone") {
  auto set = sample_set(RandomModel::theorem2(3, 0.1, 5), 200000);
  u64 naive = 0;
  u64 previous = 0;
  for (u64 x = 0; x <= 200000; ++x) {
    if (x > 0 && set.contains_value(x)) ++naive;
    u64 a = count_up_to(set, x);
    REQUIRE(a == naive);
    REQUIRE(a >= previous);
    previous = a;
  }
}

TEST_CASE("fit_density_exponent") {
  auto grid = geometric_grid(100, 1'000'000);
  auto full = fit_density_exponent(PowerSet::full(2, 1'000'000), grid);
  CHECK(full.exponent == doctest::Approx(0.5).epsilon(0.04));
  CHECK(std::abs(full.exponent - 0.5) < 0.02);
  CHECK(full.dropped.empty());

  auto cubes = fit_density_exponent(PowerSet::full(3, 100'000'000), geometric_grid(1000, 100'000'000));
  CHECK(std::abs(cubes.exponent - 1.0 / 3.0) < 0.02);

  auto single = fit_density_exponent(PowerSet(2, {3}), grid);
  CHECK(std::abs(single.exponent) < 1e-12);

  auto late = fit_density_exponent(PowerSet(2, {100}), grid);
  CHECK_FALSE(late.dropped.empty());
  CHECK(late.dropped.back() < 10000);

  std::vector<u64> two{100, 1000};
  CHECK_THROWS_AS(fit_density_exponent(PowerSet::full(2, 1000), two), ArgumentError);
  CHECK_THROWS_AS(fit_density_exponent(PowerSet(2, {}), grid), FitError);
}

TEST_CASE("theorem2 samples follow the predicted exponent") {
  auto grid = geometric_grid(10'000, 100'000'000);
  for (u64 seed = 0; seed < 5; ++seed) {
    auto set = sample_set(RandomModel::theorem2(2, 0.1, seed), 100'000'000);
    CHECK(std::abs(fit_density_exponent(set, grid).exponent - 0.4) < 0.05);
  }
}

TEST_CASE("Chernoff bound specializes to 2/x^2") {
  for (double x : {1e3, 1e4, 1e6, 1e9}) {
    for (double mean : {100.0, 500.0, 5000.0}) {
      double delta = concentration_delta(x, mean);
      if (delta > 2.0) continue;
      double bound = chernoff_bound(delta, mean);
      double target = 2.0 / (x * x);
      CHECK(std::abs(bound - target) / target < 1e-12);
    }
  }
  CHECK(chernoff_bound(4.0, 1.0) == doctest::Approx(2.0 * std::exp(-2.0)));
  CHECK_THROWS_AS(chernoff_bound(0.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(concentration_delta(10.0, 0.0), ArgumentError);
}

TEST_CASE("concentration_trial examples") {
  std::vector<u64> seeds(100);
  std::iota(seeds.begin(), seeds.end(), 0);

  auto ones = concentration_trial(RandomModel::constant_table(2, 1.0, 1'000'000, 0), 1'000'000, seeds);
  CHECK(ones.expected == doctest::Approx(1000.0));
  for (u64 c : ones.counts) CHECK(c == 1000);
  CHECK(ones.violation_fraction == 0.0);
  CHECK(ones.max_abs_deviation == doctest::Approx(0.0).epsilon(1e-9));

  auto model = RandomModel::theorem2(2, 0.1, 0);
  auto rep = concentration_trial(model, 1'000'000, seeds);
  CHECK(rep.violations == 0);
  CHECK_FALSE(rep.flagged);
  CHECK(rep.trials == 100);
  CHECK(rep.delta < 2.0);
  CHECK(std::abs(rep.chernoff_bound - rep.inverse_square_bound) / rep.inverse_square_bound < 1e-12);
  CHECK(rep.seeds == seeds);
  CHECK(rep.counts[7] == count_up_to(sample_set(model.with_seed(7), 1'000'000), 1'000'000));

  ConcentrationOptions threaded;
  threaded.threads = 4;
  CHECK(concentration_trial(model, 1'000'000, seeds, threaded).counts == rep.counts);

  auto sparse = concentration_trial(RandomModel::theorem2(2, 0.4, 0), 100, seeds);
  CHECK(sparse.flagged);
  CHECK(sparse.violation_fraction >= 0.0);
  CHECK(sparse.violation_fraction <= 1.0);

  std::vector<u64> few{1, 2, 3};
  CHECK_THROWS_AS(concentration_trial(model, 1000, few), ArgumentError);
  CHECK_THROWS_AS(concentration_trial(RandomModel::table(2, {}, 0), 1000, seeds), ArgumentError);
}
