#include "sidonpow/sunflower.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sidonpow/errors.hpp"

namespace sidonpow {

namespace {

RootSet intersect(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const RootSet& a, const RootSet& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

struct Item {
  std::size_t index;  // into the normalized collection
  RootSet rest;       // the set with the current core removed
};

class ConstructiveSearch {
 public:
  ConstructiveSearch(std::size_t r, std::size_t budget) : r_(r), budget_(budget) {}

  std::optional<std::pair<RootSet, std::vector<std::size_t>>> run(const std::vector<Item>& items) {
    if (++nodes_ > budget_) {
      exhausted_budget_ = true;
      return std::nullopt;
    }
    if (items.size() < r_) return std::nullopt;

    std::vector<const Item*> packing;
    for (const auto& it : items) {
      bool ok = std::all_of(packing.begin(), packing.end(),
                            [&](const Item* p) { return disjoint(p->rest, it.rest); });
      if (ok) packing.push_back(&it);
    }
    if (packing.size() >= r_) {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < r_; ++i) chosen.push_back(packing[i]->index);
      return std::make_pair(RootSet{}, chosen);
    }

    // every set meets the union of the packing; branch on its elements,
    // most frequent first
    std::map<u64, std::size_t> frequency;
    for (const Item* p : packing) {
      for (u64 x : p->rest) frequency.emplace(x, 0);
    }
    for (const auto& it : items) {
      for (u64 x : it.rest) {
        auto f = frequency.find(x);
        if (f != frequency.end()) ++f->second;
      }
    }
    std::vector<std::pair<std::size_t, u64>> order;
    for (auto [x, f] : frequency) {
      if (f >= r_) order.emplace_back(f, x);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    for (auto [f, x] : order) {
      std::vector<Item> sub;
      sub.reserve(f);
      for (const auto& it : items) {
        if (std::binary_search(it.rest.begin(), it.rest.end(), x)) {
          Item s{it.index, {}};
          s.rest.reserve(it.rest.size() - 1);
          for (u64 y : it.rest) {
            if (y != x) s.rest.push_back(y);
          }
          sub.push_back(std::move(s));
        }
      }
      if (auto found = run(sub)) {
        auto& core = found->first;
        core.insert(std::upper_bound(core.begin(), core.end(), x), x);
        return found;
      }
      if (exhausted_budget_) return std::nullopt;
    }
    return std::nullopt;
  }

  bool exhausted_budget() const noexcept { return exhausted_budget_; }

 private:
  std::size_t r_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_budget_ = false;
};

// All r-subsets in lexicographic order of indices.
std::optional<std::vector<std::size_t>> exhaustive_search(const std::vector<RootSet>& sets,
                                                          std::size_t r) {
  std::vector<std::size_t> pick;
  std::optional<std::vector<std::size_t>> result;
  auto rec = [&](auto&& self, std::size_t start, const RootSet* core) -> bool {
    if (pick.size() == r) {
      result = pick;
      return true;
    }
    for (std::size_t i = start; i + (r - pick.size()) <= sets.size(); ++i) {
      if (pick.size() == 1) {
        RootSet c = intersect(sets[pick[0]], sets[i]);
        pick.push_back(i);
        if (self(self, i + 1, &c)) return true;
        pick.pop_back();
        continue;
      }
      bool ok = true;
      for (std::size_t p : pick) {
        if (intersect(sets[p], sets[i]) != *core) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick.push_back(i);
      if (self(self, i + 1, core)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(rec, 0, nullptr);
  return result;
}

}  // namespace

bool is_delta_system(std::span<const RootSet> petals, const RootSet& core) {
  for (std::size_t i = 0; i < petals.size(); ++i) {
    for (std::size_t j = i + 1; j < petals.size(); ++j) {
      if (petals[i] == petals[j]) return false;
      if (intersect(petals[i], petals[j]) != core) return false;
    }
  }
  return true;
}

bool is_delta_system(std::span<const RootSet> petals) {
  if (petals.size() < 2) return true;
  return is_delta_system(petals, intersect(petals[0], petals[1]));
}

DeltaSearchResult find_delta_system(const std::vector<RootSet>& H, std::size_t r,
                                    const DeltaSearchOptions& options) {
  if (r < 3) throw ArgumentError("find_delta_system: r must be >= 3");

  // normalize, remembering the first input position of each distinct set
  std::vector<RootSet> sets;
  std::vector<std::size_t> origin;
  {
    std::map<RootSet, std::size_t> seen;
    for (std::size_t i = 0; i < H.size(); ++i) {
      RootSet s = H[i];
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (seen.emplace(s, i).second) {
        sets.push_back(std::move(s));
        origin.push_back(i);
      }
    }
  }

  auto build = [&](std::vector<std::size_t> chosen) {
    std::sort(chosen.begin(), chosen.end());
    SunflowerFamily family;
    for (std::size_t c : chosen) {
      family.petals.push_back(sets[c]);
      family.indices.push_back(origin[c]);
    }
    family.core = intersect(family.petals[0], family.petals[1]);
    return family;
  };

  DeltaSearchResult result;
  if (sets.size() < r) return result;

  std::vector<Item> items;
  items.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) items.push_back({i, sets[i]});
  ConstructiveSearch search(r, options.node_budget);
  if (auto found = search.run(items)) {
    result.family = build(std::move(found->second));
    return result;
  }
  if (sets.size() <= options.exhaustive_limit) {
    if (auto chosen = exhaustive_search(sets, r)) result.family = build(std::move(*chosen));
    return result;
  }
  result.complete = false;
  return result;
}

double sunflower_threshold(std::size_t r, std::size_t s) {
  double factorial = 1.0;
  for (std::size_t i = 2; i <= s; ++i) factorial *= static_cast<double>(i);
  return std::pow(static_cast<double>(r - 1), static_cast<double>(s)) * factorial;
}

}  // namespace sidonpow
