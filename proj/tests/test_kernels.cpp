#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sidonpow/kernels/bernoulli.hpp"

using namespace sidonpow::kernels;

TEST_CASE("mix64 matches the SplitMix64 reference stream") {
  // first two outputs of SplitMix64 seeded with 0
  CHECK(mix64(kGolden) == 0xe220a8397b1dcdafULL);
  CHECK(mix64(2 * kGolden) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("probability_threshold") {
  CHECK(probability_threshold(0.0) == 0);
  CHECK(probability_threshold(-1.0) == 0);
  CHECK(probability_threshold(1.0) == kUnit);
  CHECK(probability_threshold(0.5) == kUnit / 2);
  CHECK(probability_threshold(std::nan("")) == 0);
}

TEST_CASE("scalar kernel agrees with the floating-point definition") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const u64 key = seed_key(99);
  for (int i = 0; i < 100000; ++i) {
    u64 n = rng() >> (rng() % 60);
    double alpha = unit(rng);
    std::vector<u64> v{n}, t{probability_threshold(alpha)};
    std::vector<std::uint8_t> out(1);
    bernoulli_scalar(key, v, t, out);
    double u = std::ldexp(static_cast<double>(uniform_bits(key, n)), -53);
    REQUIRE(static_cast<bool>(out[0]) == (u < alpha));
  }
}

TEST_CASE("every available ISA variant matches scalar") {
  std::mt19937_64 rng(5);
  for (Isa isa : {Isa::scalar, Isa::avx2}) {
    if (!isa_available(isa)) {
      MESSAGE("skipping unavailable ISA " << isa_name(isa));
      continue;
    }
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 17u, 1000u, 4099u}) {
      std::vector<u64> values(len), thresholds(len);
      for (std::size_t i = 0; i < len; ++i) {
        values[i] = rng();
        switch (rng() % 4) {
          case 0: thresholds[i] = 0; break;
          case 1: thresholds[i] = kUnit; break;
          default: thresholds[i] = rng() % (kUnit + 1); break;
        }
      }
      const u64 key = seed_key(rng());
      std::vector<std::uint8_t> expected(len), got(len);
      bernoulli_scalar(key, values, thresholds, expected);
      bernoulli(key, values, thresholds, got, isa);
      CAPTURE(isa_name(isa));
      CAPTURE(len);
      REQUIRE(got == expected);
    }
  }
}

TEST_CASE("best_isa is available") { CHECK(isa_available(best_isa())); }
