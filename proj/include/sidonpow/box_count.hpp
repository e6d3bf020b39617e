#pragma once

#include <span>

#include "sidonpow/checked.hpp"

namespace sidonpow {

/// Ordered tuples (y_1, ..., y_l) with 1 <= y_i <= bounds[i] and
/// y_1^k + ... + y_l^k = n.
u64 count_solutions_in_box(u64 n, unsigned k, std::span<const u64> bounds);

/// The shape (1/n) * prod P_i + (prod P_i)^(1 - k/l) that bounds the box count
/// up to a constant for large l.
double box_count_bound_shape(u64 n, unsigned k, std::span<const u64> bounds);

}  // namespace sidonpow
