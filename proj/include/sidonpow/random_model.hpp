#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sidonpow/checked.hpp"

namespace sidonpow {

enum class ModelKind { theorem2, theorem3, table };

std::string_view model_kind_name(ModelKind kind) noexcept;
ModelKind parse_model_kind(std::string_view name);

/// Membership law alpha_n = P(n in A) on the positive k-th powers, plus the
/// seed that fixes one realization.
///
///  - theorem2: alpha_n = n^(-eps), with 0 < eps < 1/k.
///  - theorem3: alpha_n = n^(-(1/k - 1/h + eps)), with h > k and 0 < eps < 1/h.
///  - table: explicit (n, alpha_n) pairs; alpha_n = 0 for any n not listed.
///
/// alpha_n = 0 whenever n is not a k-th power. Immutable after construction.
class RandomModel {
 public:
  static RandomModel theorem2(unsigned k, double epsilon, u64 seed);
  static RandomModel theorem3(unsigned k, unsigned h, double epsilon, u64 seed);
  static RandomModel table(unsigned k, std::vector<std::pair<u64, double>> entries, u64 seed);
  /// Table model with the same alpha on every k-th power up to max_value.
  static RandomModel constant_table(unsigned k, double alpha, u64 max_value, u64 seed);

  ModelKind kind() const noexcept { return kind_; }
  unsigned k() const noexcept { return k_; }
  unsigned h() const noexcept { return h_; }
  double epsilon() const noexcept { return epsilon_; }
  u64 seed() const noexcept { return seed_; }
  const std::vector<std::pair<u64, double>>& entries() const noexcept { return table_; }

  /// Same law, different realization.
  RandomModel with_seed(u64 seed) const;

  /// The exponent s in alpha_n = n^(-s) for the power-law kinds.
  std::optional<double> decay_exponent() const noexcept;

  double membership_probability(u64 n) const;

  /// Leading term c * x^e of E[A(x)] for the power-law kinds.
  std::optional<double> closed_form_count(double x) const;
  /// The exponent e of that leading term (1/k - eps or 1/h - eps).
  std::optional<double> density_exponent() const noexcept;

  std::string describe() const;

 private:
  RandomModel() = default;

  ModelKind kind_ = ModelKind::table;
  unsigned k_ = 1;
  unsigned h_ = 0;
  double epsilon_ = 0.0;
  u64 seed_ = 0;
  std::vector<std::pair<u64, double>> table_;  // sorted by n
};

}  // namespace sidonpow
