#include "sidonpow/power_set.hpp"

#include <algorithm>

namespace sidonpow {

PowerSet::PowerSet(unsigned k, std::vector<u64> roots) : k_(k), roots_(std::move(roots)) {
  if (k_ < 1) throw ArgumentError("PowerSet: k must be >= 1");
  values_.reserve(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i] < 1) throw ArgumentError("PowerSet: roots must be >= 1");
    if (i > 0 && roots_[i] <= roots_[i - 1]) {
      throw ArgumentError("PowerSet: roots must be strictly increasing");
    }
    values_.push_back(checked_pow(roots_[i], k_));
  }
}

PowerSet PowerSet::full(unsigned k, u64 max_value) {
  u64 top = iroot(max_value, k);
  std::vector<u64> roots(top);
  for (u64 m = 1; m <= top; ++m) roots[m - 1] = m;
  return PowerSet(k, std::move(roots));
}

bool PowerSet::contains_value(u64 n) const {
  return std::binary_search(values_.begin(), values_.end(), n);
}

bool PowerSet::contains_root(u64 m) const {
  return std::binary_search(roots_.begin(), roots_.end(), m);
}

PowerSet PowerSet::restricted_to(u64 max_value) const {
  auto end = std::upper_bound(values_.begin(), values_.end(), max_value);
  std::size_t count = static_cast<std::size_t>(end - values_.begin());
  PowerSet out;
  out.k_ = k_;
  out.roots_.assign(roots_.begin(), roots_.begin() + count);
  out.values_.assign(values_.begin(), values_.begin() + count);
  return out;
}

bool PowerSet::is_subset_of(const PowerSet& other) const {
  if (k_ != other.k_) return false;
  return std::includes(other.roots_.begin(), other.roots_.end(), roots_.begin(),
                       roots_.end());
}

PowerSet Domain::materialize(u64 max_value) const {
  if (set_) return set_->restricted_to(max_value);
  return PowerSet::full(k_, max_value);
}

std::string Domain::label() const {
  if (set_) return "set(k=" + std::to_string(k_) + ",size=" + std::to_string(set_->size()) + ")";
  return "full(k=" + std::to_string(k_) + ")";
}

}  // namespace sidonpow
