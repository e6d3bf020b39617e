#include <doctest.h>

#include <cmath>

#include "brute_force.hpp"
#include "sidonpow/oracles.hpp"

using namespace sidonpow;

TEST_CASE("sum_two_squares_sieve examples") {
  CHECK(sum_two_squares_sieve(100).count == 43);
  CHECK(sum_two_squares_sieve(2).count == 2);
  auto big = sum_two_squares_sieve(1'000'000);
  CHECK(big.normalized == doctest::Approx(big.count * std::sqrt(std::log(1e6)) / 1e6));
  CHECK(big.normalized > kLandauRamanujan);
  CHECK(big.normalized < 1.0);
  CHECK_THROWS_AS(sum_two_squares_sieve(1), ArgumentError);
}

TEST_CASE("sieve agrees with a per-n search") {
  u64 count = 0;
  for (u64 n = 1; n <= 10000; ++n) {
    if (brute::is_sum_two_squares(n)) ++count;
    if (n >= 2 && (n % 97 == 0 || n == 10000)) REQUIRE(sum_two_squares_sieve(n).count == count);
  }
}

TEST_CASE("divisor_bound_check examples") {
  auto taxi = divisor_bound_check(3, 1729);
  CHECK(taxi.weak_count == 2);
  CHECK(taxi.divisor_count == 8);
  CHECK(taxi.ok);
  CHECK(taxi.unique_per_divisor);

  auto two = divisor_bound_check(3, 2);
  CHECK(two.weak_count == 1);
  CHECK(two.divisor_count == 2);
  CHECK(two.ok);

  auto fifth = divisor_bound_check(5, 33);
  CHECK(fifth.weak_count == 1);
  CHECK(fifth.divisor_count == 4);
  CHECK(fifth.ok);

  CHECK_THROWS_AS(divisor_bound_check(2, 50), ArgumentError);
  CHECK_THROWS_AS(divisor_bound_check(3, 1), ArgumentError);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(360) == 24);
}

TEST_CASE("divisor bound holds for every n up to 10^5") {
  for (unsigned k : {3u, 5u}) {
    for (u64 n = 2; n <= 100000; ++n) {
      auto c = divisor_bound_check(k, n);
      if (!c.ok || !c.unique_per_divisor) {
        FAIL("divisor bound failed at k=" << k << " n=" << n);
      }
      if (n <= 20000) REQUIRE(c.weak_count == brute::count(n, 2, k, brute::all_roots(n, k), false));
    }
  }
}

TEST_CASE("taxicab_scan examples") {
  CHECK(taxicab_scan(3, 5000, 2) == std::vector<ScanHit>{{1729, 2}, {4104, 2}});
  CHECK(taxicab_scan(2, 100, 2) == std::vector<ScanHit>{{50, 2}, {65, 2}, {85, 2}});
  CHECK(taxicab_scan(5, 1'000'000, 2).empty());
  auto cubes = taxicab_scan(3, 100'000, 2);
  for (const auto& hit : cubes) {
    CHECK(hit.count == brute::count(hit.n, 2, 3, brute::all_roots(hit.n, 3), false));
  }
  CHECK(cubes.size() == 10);
  CHECK_THROWS_AS(taxicab_scan(3, 100, 1), ArgumentError);
}

TEST_CASE("hypothesis_k_scan examples") {
  auto squares = hypothesis_k_scan(2, 2, 100000, 0.5);
  CHECK(squares.violations.empty());
  CHECK(squares.max_ratio < 1.0);
  CHECK(squares.worst_n >= 2);

  auto cubes = hypothesis_k_scan(3, 2, 2000, 0.05);
  CHECK(cubes.violations == std::vector<ScanHit>{{1729, 2}});

  auto empty = hypothesis_k_scan(2, 2, 1, 0.5);
  CHECK(empty.violations.empty());
  CHECK(empty.max_ratio == 0.0);
  CHECK_THROWS_AS(hypothesis_k_scan(2, 2, 100, 0.0), ArgumentError);
}
