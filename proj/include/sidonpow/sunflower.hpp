#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sidonpow/checked.hpp"

namespace sidonpow {

/// A finite set as a sorted vector without duplicates.
using RootSet = std::vector<u64>;

/// A Delta-system: petals whose pairwise intersections all equal the core.
struct SunflowerFamily {
  RootSet core;
  std::vector<RootSet> petals;
  std::vector<std::size_t> indices;  // positions of the petals in the input
};

struct DeltaSearchResult {
  std::optional<SunflowerFamily> family;
  /// false only when no family was found and the search was not exhaustive
  bool complete = true;
};

struct DeltaSearchOptions {
  /// collections up to this size get an exhaustive fallback
  std::size_t exhaustive_limit = 20;
  /// node budget for the constructive recursion
  std::size_t node_budget = 1'000'000;
};

/// Every pair of distinct petals intersects exactly in `core`.
bool is_delta_system(std::span<const RootSet> petals, const RootSet& core);
/// Same, with the core taken from the first pair; fewer than two sets pass.
bool is_delta_system(std::span<const RootSet> petals);

/// Looks for r members of H forming a Delta-system. Follows the classical
/// argument: a maximal disjoint subfamily of size >= r is an answer with an
/// empty core; otherwise some element of its union is shared by many sets,
/// and the search recurses on those sets with that element removed. Input
/// sets are normalized (sorted, deduplicated) and repeated sets are ignored.
DeltaSearchResult find_delta_system(const std::vector<RootSet>& H, std::size_t r,
                                    const DeltaSearchOptions& options = {});

/// (r - 1)^s * s!: any larger family of sets of size <= s contains an
/// r-sunflower.
double sunflower_threshold(std::size_t r, std::size_t s);

}  // namespace sidonpow
