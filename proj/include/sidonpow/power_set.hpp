#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sidonpow/checked.hpp"

namespace sidonpow {

/// A finite set of k-th powers {m^k : m in roots}, stored by its roots.
///
/// Roots are strictly increasing and >= 1; every stored root has a k-th power
/// that fits in 64 bits. Values are cached alongside the roots.
class PowerSet {
 public:
  PowerSet() : PowerSet(1, {}) {}
  PowerSet(unsigned k, std::vector<u64> roots);

  /// Every k-th power m^k <= max_value.
  static PowerSet full(unsigned k, u64 max_value);

  unsigned k() const noexcept { return k_; }
  std::size_t size() const noexcept { return roots_.size(); }
  bool empty() const noexcept { return roots_.empty(); }

  std::span<const u64> roots() const noexcept { return roots_; }
  std::span<const u64> values() const noexcept { return values_; }
  u64 root(std::size_t i) const { return roots_.at(i); }
  u64 value(std::size_t i) const { return values_.at(i); }

  /// The membership indicator: true iff n = m^k for a stored root m.
  bool contains_value(u64 n) const;
  bool contains_root(u64 m) const;

  /// Elements with value <= max_value.
  PowerSet restricted_to(u64 max_value) const;

  /// Same k and every root of *this is a root of other.
  bool is_subset_of(const PowerSet& other) const;

  friend bool operator==(const PowerSet&, const PowerSet&) = default;

 private:
  unsigned k_;
  std::vector<u64> roots_;
  std::vector<u64> values_;
};

/// Summation domain: all positive k-th powers, or an explicit PowerSet.
class Domain {
 public:
  static Domain full(unsigned k) { return Domain(k, std::nullopt); }
  static Domain of(PowerSet set) {
    unsigned k = set.k();
    return Domain(k, std::move(set));
  }

  unsigned k() const noexcept { return k_; }
  bool is_full() const noexcept { return !set_.has_value(); }
  const PowerSet* set() const noexcept { return set_ ? &*set_ : nullptr; }

  /// Elements of the domain with value <= max_value.
  PowerSet materialize(u64 max_value) const;

  std::string label() const;

 private:
  Domain(unsigned k, std::optional<PowerSet> set) : k_(k), set_(std::move(set)) {}

  unsigned k_;
  std::optional<PowerSet> set_;
};

}  // namespace sidonpow
