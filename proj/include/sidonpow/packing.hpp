#pragma once

#include <cstddef>
#include <vector>

#include "sidonpow/errors.hpp"
#include "sidonpow/power_set.hpp"

namespace sidonpow {

enum class PackingMode { exact, greedy };

/// A family of pairwise-disjoint strict representations of n with l parts.
struct PackingResult {
  u64 n = 0;
  unsigned l = 0;
  std::size_t f_value = 0;
  std::vector<std::vector<u64>> witness;  // root sets, lexicographic order
  bool exact = true;
};

/// Thrown by exact mode when the representation list is longer than the cap;
/// carries the greedy lower bound.
class PackingCapExceeded : public ResourceError {
 public:
  PackingCapExceeded(std::size_t representations, std::size_t cap, PackingResult greedy);
  const PackingResult& greedy() const noexcept { return greedy_; }

 private:
  PackingResult greedy_;
};

inline constexpr std::size_t kDefaultPackingCap = 64;

/// f_l(n): the largest number of pairwise-disjoint representations of n as a
/// sum of l distinct elements of A. Exact mode solves the set packing by
/// branch and bound; greedy mode takes first-fit in lexicographic order.
PackingResult max_disjoint_representations(u64 n, unsigned l, const PowerSet& set,
                                           PackingMode mode = PackingMode::exact,
                                           std::size_t cap = kDefaultPackingCap);

/// Same, over an explicit list of part sets.
PackingResult pack_disjoint(u64 n, unsigned l, const std::vector<std::vector<u64>>& sets,
                            PackingMode mode, std::size_t cap = kDefaultPackingCap);

}  // namespace sidonpow
