#include "sidonpow/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "sidonpow/representations.hpp"

namespace sidonpow {

PackingCapExceeded::PackingCapExceeded(std::size_t representations, std::size_t cap,
                                       PackingResult greedy)
    : ResourceError("exact packing over " + std::to_string(representations) +
                    " representations exceeds the cap of " + std::to_string(cap) +
                    "; greedy lower bound is " + std::to_string(greedy.f_value)),
      greedy_(std::move(greedy)) {}

namespace {

bool disjoint(const std::vector<u64>& a, const std::vector<u64>& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

PackingResult greedy_packing(u64 n, unsigned l, const std::vector<std::vector<u64>>& sets) {
  PackingResult out{n, l, 0, {}, false};
  for (const auto& s : sets) {
    bool ok = std::all_of(out.witness.begin(), out.witness.end(),
                          [&](const auto& w) { return disjoint(s, w); });
    if (ok) out.witness.push_back(s);
  }
  out.f_value = out.witness.size();
  return out;
}

// Maximum independent set in the conflict graph (at most 64 vertices).
struct CliqueSearch {
  std::vector<std::uint64_t> conflicts;
  std::uint64_t best_set = 0;
  int best_size = 0;

  void run(std::uint64_t candidates, std::uint64_t chosen, int size) {
    if (candidates == 0) {
      if (size > best_size) {
        best_size = size;
        best_set = chosen;
      }
      return;
    }
    if (size + std::popcount(candidates) <= best_size) return;
    int v = std::countr_zero(candidates);
    std::uint64_t bit = std::uint64_t{1} << v;
    run(candidates & ~bit & ~conflicts[static_cast<std::size_t>(v)], chosen | bit, size + 1);
    run(candidates & ~bit, chosen, size);
  }
};

}  // namespace

PackingResult pack_disjoint(u64 n, unsigned l, const std::vector<std::vector<u64>>& sets,
                            PackingMode mode, std::size_t cap) {
  PackingResult greedy = greedy_packing(n, l, sets);
  if (mode == PackingMode::greedy) return greedy;
  const std::size_t limit = std::min<std::size_t>(cap, 64);
  if (sets.size() > limit) throw PackingCapExceeded(sets.size(), limit, std::move(greedy));

  CliqueSearch search;
  search.conflicts.assign(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!disjoint(sets[i], sets[j])) {
        search.conflicts[i] |= std::uint64_t{1} << j;
        search.conflicts[j] |= std::uint64_t{1} << i;
      }
    }
  }
  // seed the bound with the greedy answer
  search.best_size = static_cast<int>(greedy.f_value);
  for (std::size_t i = 0, w = 0; i < sets.size() && w < greedy.witness.size(); ++i) {
    if (sets[i] == greedy.witness[w]) {
      search.best_set |= std::uint64_t{1} << i;
      ++w;
    }
  }
  std::uint64_t all = sets.size() == 64 ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << sets.size()) - 1;
  search.run(all, 0, 0);

  PackingResult out{n, l, 0, {}, true};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (search.best_set >> i & 1) out.witness.push_back(sets[i]);
  }
  out.f_value = out.witness.size();
  return out;
}

PackingResult max_disjoint_representations(u64 n, unsigned l, const PowerSet& set,
                                           PackingMode mode, std::size_t cap) {
  auto reps = enumerate_representations(n, l, Domain::of(set), Ordering::strict);
  std::vector<std::vector<u64>> sets;
  sets.reserve(reps.size());
  for (auto& r : reps) sets.push_back(std::move(r.parts));
  return pack_disjoint(n, l, sets, mode, cap);
}

}  // namespace sidonpow
