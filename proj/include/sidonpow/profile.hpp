#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sidonpow/representations.hpp"

namespace sidonpow {

enum class ProfileStrategy { automatic, sweep, meet_in_the_middle };

struct ProfileOptions {
  ProfileStrategy strategy = ProfileStrategy::automatic;
  /// automatic picks meet-in-the-middle when h >= mitm_min_h or the range
  /// holds more than mitm_min_range integers.
  unsigned mitm_min_h = 4;
  u64 mitm_min_range = 100000;
  /// Budget for count arrays and half-sum tables, all workers included.
  u64 max_bytes = u64{1} << 30;
  unsigned threads = 1;
};

/// n -> (R(n), R*(n)) for every n in [lo, hi].
class RepCountProfile {
 public:
  RepCountProfile(unsigned k, unsigned h, std::string domain, u64 lo, u64 hi);

  unsigned k() const noexcept { return k_; }
  unsigned h() const noexcept { return h_; }
  const std::string& domain() const noexcept { return domain_; }
  u64 lo() const noexcept { return lo_; }
  u64 hi() const noexcept { return hi_; }

  /// Strict count R(n); n must lie in [lo, hi].
  std::uint32_t strict(u64 n) const { return strict_.at(offset(n)); }
  /// Weak count R*(n).
  std::uint32_t weak(u64 n) const { return weak_.at(offset(n)); }

  std::vector<std::uint32_t>& strict_counts() noexcept { return strict_; }
  std::vector<std::uint32_t>& weak_counts() noexcept { return weak_; }
  const std::vector<std::uint32_t>& strict_counts() const noexcept { return strict_; }
  const std::vector<std::uint32_t>& weak_counts() const noexcept { return weak_; }

  friend bool operator==(const RepCountProfile&, const RepCountProfile&) = default;

 private:
  std::size_t offset(u64 n) const {
    if (n < lo_ || n > hi_) throw ArgumentError("n outside profile range");
    return static_cast<std::size_t>(n - lo_);
  }

  unsigned k_, h_;
  std::string domain_;
  u64 lo_, hi_;
  std::vector<std::uint32_t> strict_;
  std::vector<std::uint32_t> weak_;
};

/// Strict and weak counts for every n in [lo, hi] from one sweep over all
/// tuples with sum <= hi (no per-n enumeration).
RepCountProfile representation_profile(u64 lo, u64 hi, unsigned h, const Domain& domain,
                                       const ProfileOptions& options = {});

}  // namespace sidonpow
