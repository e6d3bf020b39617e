#pragma once

#include "sidonpow/kernels/bernoulli.hpp"
#include "sidonpow/power_set.hpp"
#include "sidonpow/random_model.hpp"

namespace sidonpow {

struct SampleOptions {
  unsigned threads = 1;
  kernels::Isa isa = kernels::best_isa();
};

/// One realization of the model restricted to [1, x_max]: every k-th power
/// n <= x_max is kept iff its own Bernoulli(alpha_n) trial succeeds. The trial
/// for n depends only on (seed, n), so growing x_max never changes earlier
/// decisions and the output does not depend on thread count or ISA.
PowerSet sample_set(const RandomModel& model, u64 x_max, const SampleOptions& options = {});

/// The single trial for n (false when alpha_n = 0).
bool sampled_member(const RandomModel& model, u64 n);

}  // namespace sidonpow
