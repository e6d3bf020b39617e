#include "sidonpow/random_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sidonpow {

std::string_view model_kind_name(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::theorem2: return "theorem2";
    case ModelKind::theorem3: return "theorem3";
    case ModelKind::table: return "table";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "theorem2") return ModelKind::theorem2;
  if (name == "theorem3") return ModelKind::theorem3;
  if (name == "table") return ModelKind::table;
  throw ArgumentError("unknown model kind '" + std::string(name) + "'");
}

RandomModel RandomModel::theorem2(unsigned k, double epsilon, u64 seed) {
  if (k < 1) throw ArgumentError("theorem2 model: k must be >= 1");
  if (!(epsilon > 0.0) || !(epsilon < 1.0 / k)) {
    throw ArgumentError("theorem2 model requires 0 < epsilon < 1/k");
  }
  RandomModel m;
  m.kind_ = ModelKind::theorem2;
  m.k_ = k;
  m.epsilon_ = epsilon;
  m.seed_ = seed;
  return m;
}

RandomModel RandomModel::theorem3(unsigned k, unsigned h, double epsilon, u64 seed) {
  if (k < 1) throw ArgumentError("theorem3 model: k must be >= 1");
  if (h <= k) throw ArgumentError("theorem3 model requires h > k");
  if (!(epsilon > 0.0) || !(epsilon < 1.0 / h)) {
    throw ArgumentError("theorem3 model requires 0 < epsilon < 1/h");
  }
  RandomModel m;
  m.kind_ = ModelKind::theorem3;
  m.k_ = k;
  m.h_ = h;
  m.epsilon_ = epsilon;
  m.seed_ = seed;
  return m;
}

RandomModel RandomModel::table(unsigned k, std::vector<std::pair<u64, double>> entries,
                               u64 seed) {
  if (k < 1) throw ArgumentError("table model: k must be >= 1");
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [n, alpha] = entries[i];
    if (!is_perfect_power(n, k)) {
      throw ArgumentError("table model: " + std::to_string(n) + " is not a k-th power");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw ArgumentError("table model: probabilities must lie in [0, 1]");
    }
    if (i > 0 && entries[i - 1].first == n) {
      throw ArgumentError("table model: duplicate entry for " + std::to_string(n));
    }
  }
  RandomModel m;
  m.kind_ = ModelKind::table;
  m.k_ = k;
  m.seed_ = seed;
  m.table_ = std::move(entries);
  return m;
}

RandomModel RandomModel::constant_table(unsigned k, double alpha, u64 max_value, u64 seed) {
  std::vector<std::pair<u64, double>> entries;
  u64 top = iroot(max_value, k);
  entries.reserve(top);
  for (u64 m = 1; m <= top; ++m) entries.emplace_back(checked_pow(m, k), alpha);
  return table(k, std::move(entries), seed);
}

RandomModel RandomModel::with_seed(u64 seed) const {
  RandomModel copy = *this;
  copy.seed_ = seed;
  return copy;
}

std::optional<double> RandomModel::decay_exponent() const noexcept {
  switch (kind_) {
    case ModelKind::theorem2: return epsilon_;
    case ModelKind::theorem3: return 1.0 / k_ - 1.0 / h_ + epsilon_;
    case ModelKind::table: return std::nullopt;
  }
  return std::nullopt;
}

double RandomModel::membership_probability(u64 n) const {
  if (n == 0) return 0.0;
  if (kind_ == ModelKind::table) {
    auto it = std::lower_bound(table_.begin(), table_.end(), n,
                               [](const auto& e, u64 v) { return e.first < v; });
    return (it != table_.end() && it->first == n) ? it->second : 0.0;
  }
  if (!is_perfect_power(n, k_)) return 0.0;
  return std::pow(static_cast<double>(n), -*decay_exponent());
}

std::optional<double> RandomModel::density_exponent() const noexcept {
  switch (kind_) {
    case ModelKind::theorem2: return 1.0 / k_ - epsilon_;
    case ModelKind::theorem3: return 1.0 / h_ - epsilon_;
    case ModelKind::table: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<double> RandomModel::closed_form_count(double x) const {
  // integral of t^(-k s) over [0, x^(1/k)]
  auto e = density_exponent();
  if (!e) return std::nullopt;
  double coefficient = kind_ == ModelKind::theorem2
                           ? 1.0 / (1.0 - k_ * epsilon_)
                           : 1.0 / (static_cast<double>(k_) / h_ - k_ * epsilon_);
  return coefficient * std::pow(x, *e);
}

std::string RandomModel::describe() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "model=%s k=%u h=%u epsilon=%.17g seed=%llu",
                std::string(model_kind_name(kind_)).c_str(), k_, h_, epsilon_,
                static_cast<unsigned long long>(seed_));
  std::string out = buf;
  if (kind_ == ModelKind::table) out += " entries=" + std::to_string(table_.size());
  return out;
}

}  // namespace sidonpow
