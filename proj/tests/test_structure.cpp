#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "brute_force.hpp"
#include "sidonpow/bhg.hpp"
#include "sidonpow/boundedness.hpp"
#include "sidonpow/density.hpp"
#include "sidonpow/greedy.hpp"
#include "sidonpow/packing.hpp"
#include "sidonpow/sampling.hpp"
#include "sidonpow/sunflower.hpp"

using namespace sidonpow;

namespace {

std::vector<u64> roots_of(const PowerSet& s) { return {s.roots().begin(), s.roots().end()}; }

// maximum packing by trying every subfamily
std::size_t brute_packing(const std::vector<std::vector<u64>>& sets) {
  std::size_t best = 0;
  const std::size_t n = sets.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<u64> used;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (u64 x : sets[i]) {
        if (std::find(used.begin(), used.end(), x) != used.end()) ok = false;
        used.push_back(x);
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

bool brute_has_sunflower(const std::vector<RootSet>& H, std::size_t r) {
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == r) {
      std::vector<RootSet> petals;
      for (auto i : pick) petals.push_back(H[i]);
      return is_delta_system(petals);
    }
    for (std::size_t i = start; i < H.size(); ++i) {
      pick.push_back(i);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("max_disjoint_representations examples") {
  auto squares = PowerSet::full(2, 324);
  auto r = max_disjoint_representations(325, 2, squares);
  CHECK(r.f_value == 3);
  CHECK(r.exact);
  CHECK(r.witness == std::vector<std::vector<u64>>{{1, 18}, {6, 17}, {10, 15}});
  CHECK(max_disjoint_representations(50, 2, PowerSet::full(2, 50)).f_value == 1);
  auto none = max_disjoint_representations(3, 2, PowerSet::full(2, 3));
  CHECK(none.f_value == 0);
  CHECK(none.witness.empty());
  CHECK_THROWS_AS(max_disjoint_representations(50, 1, squares), ArgumentError);
}

TEST_CASE("exact packing against exhaustive search; greedy is a lower bound") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    std::vector<std::vector<u64>> sets;
    std::size_t count = 1 + rng() % 14;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<u64> s;
      for (int j = 0; j < 3; ++j) s.push_back(rng() % 12);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      sets.push_back(s);
    }
    auto exact = pack_disjoint(0, 3, sets, PackingMode::exact);
    auto greedy = pack_disjoint(0, 3, sets, PackingMode::greedy);
    REQUIRE(exact.f_value == brute_packing(sets));
    REQUIRE(greedy.f_value <= exact.f_value);
    CHECK_FALSE(greedy.exact);
    for (std::size_t i = 0; i < exact.witness.size(); ++i) {
      for (std::size_t j = i + 1; j < exact.witness.size(); ++j) {
        std::vector<u64> both;
        std::set_intersection(exact.witness[i].begin(), exact.witness[i].end(),
                              exact.witness[j].begin(), exact.witness[j].end(),
                              std::back_inserter(both));
        REQUIRE(both.empty());
      }
    }
  }
}

TEST_CASE("f_l(n) <= R_{A,l}(n) on sampled sets") {
  auto set = sample_set(RandomModel::theorem2(2, 0.05, 3), 200000);
  for (unsigned l : {2u, 3u}) {
    for (u64 n = 2; n <= 200000; n += 97) {
      auto reps = enumerate_representations(n, l, Domain::of(set), Ordering::strict);
      if (reps.size() > 64) continue;
      auto packed = max_disjoint_representations(n, l, set);
      REQUIRE(packed.f_value <= reps.size());
      for (const auto& w : packed.witness) {
        u64 s = 0;
        for (u64 p : w) s += p * p;
        REQUIRE(s == n);
        REQUIRE(w.size() == l);
      }
    }
  }
}

TEST_CASE("packing cap falls back to greedy value in the error") {
  std::vector<std::vector<u64>> sets;
  for (u64 i = 0; i < 70; ++i) sets.push_back({2 * i, 2 * i + 1});
  try {
    pack_disjoint(1, 2, sets, PackingMode::exact, 64);
    FAIL("expected PackingCapExceeded");
  } catch (const PackingCapExceeded& e) {
    CHECK(e.greedy().f_value == 70);
    CHECK_FALSE(e.greedy().exact);
  }
}

TEST_CASE("find_delta_system examples") {
  auto a = find_delta_system({{1, 2}, {1, 3}, {1, 4}}, 3);
  REQUIRE(a.family);
  CHECK(a.family->core == RootSet{1});
  CHECK(a.family->petals.size() == 3);

  auto b = find_delta_system({{1, 2}, {3, 4}, {5, 6}}, 3);
  REQUIRE(b.family);
  CHECK(b.family->core.empty());

  auto c = find_delta_system({{1, 2}, {2, 3}, {1, 3}}, 3);  // a triangle has none
  CHECK_FALSE(c.family);
  CHECK(c.complete);

  CHECK_THROWS_AS(find_delta_system({{1}}, 2), ArgumentError);
  CHECK_FALSE(find_delta_system({{1, 2}, {1, 2}, {1, 3}}, 3).family);  // duplicates collapse
  CHECK(sunflower_threshold(3, 2) == 8.0);
}

TEST_CASE("delta system validator") {
  std::vector<RootSet> good{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}};
  CHECK(is_delta_system(good));
  CHECK(is_delta_system(good, RootSet{1}));
  CHECK_FALSE(is_delta_system(good, RootSet{}));
  std::vector<RootSet> bad{{1, 2}, {2, 3}, {1, 3}};
  CHECK_FALSE(is_delta_system(bad));
  std::vector<RootSet> repeated{{1, 2}, {1, 2}, {1, 3}};
  CHECK_FALSE(is_delta_system(repeated));
}

TEST_CASE("find_delta_system matches brute force on small random families") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) {
    std::vector<RootSet> H;
    std::size_t size = 1 + rng() % 3;
    std::size_t count = std::min<std::size_t>(3 + rng() % 9, size == 1 ? 8 : 12);
    while (H.size() < count) {
      RootSet s;
      for (std::size_t j = 0; j < size; ++j) s.push_back(rng() % 8);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      if (std::find(H.begin(), H.end(), s) == H.end()) H.push_back(s);
    }
    std::size_t r = 3 + rng() % 2;
    auto res = find_delta_system(H, r);
    REQUIRE(res.complete);
    REQUIRE(res.family.has_value() == brute_has_sunflower(H, r));
    if (res.family) {
      REQUIRE(res.family->petals.size() == r);
      REQUIRE(is_delta_system(res.family->petals, res.family->core));
      for (std::size_t i = 0; i < r; ++i) REQUIRE(H[res.family->indices[i]] == res.family->petals[i]);
    }
  }
}

TEST_CASE("families above the (r-1)^s s! threshold always contain a sunflower") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    // sets of size 3, r = 3: threshold 2^3 * 3! = 48
    std::vector<RootSet> H;
    while (H.size() < 49) {
      RootSet s;
      while (s.size() < 3) {
        u64 x = rng() % 30;
        if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
      }
      std::sort(s.begin(), s.end());
      if (std::find(H.begin(), H.end(), s) == H.end()) H.push_back(s);
    }
    auto res = find_delta_system(H, 3);
    REQUIRE(res.family);
    REQUIRE(is_delta_system(res.family->petals, res.family->core));
  }
}

TEST_CASE("verify_bhg examples") {
  auto cubes = PowerSet::full(3, 16 * 16 * 16);
  auto v = verify_bhg(cubes, 2, 1, 5000);
  CHECK_FALSE(v.ok);
  CHECK(v.violation_n == 1729);
  CHECK(v.violation_count == 2);

  for (unsigned k : {2u, 3u, 5u}) CHECK(verify_bhg(PowerSet(k, {1, 2}), 2, 1, 100000).ok);
  CHECK(verify_bhg(PowerSet(2, {}), 3, 1, 1000).ok);
  CHECK_THROWS_AS(verify_bhg(cubes, 1, 1, 10), ArgumentError);
  CHECK_THROWS_AS(verify_bhg(cubes, 2, 0, 10), ArgumentError);
}

TEST_CASE("sidon_counting_bound") {
  CHECK(sidon_counting_bound(2, 1, 100) == doctest::Approx(21.0));
  CHECK(sidon_counting_bound(2, 1, 1) == doctest::Approx(3.0));
  CHECK(sidon_counting_bound(3, 2, 1000) == doctest::Approx(35.0192724889).epsilon(1e-9));
  CHECK_THROWS_AS(sidon_counting_bound(1, 1, 10), ArgumentError);
}

TEST_CASE("B_h[g] sets respect the counting bound") {
  std::mt19937_64 rng(2);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 40; ++t) {
    unsigned h = 2 + t % 2;
    unsigned g = 1 + t % 3;
    std::vector<u64> roots;
    for (u64 m = 1; m <= 60; ++m) {
      if (rng() % 4 == 0) roots.push_back(m);
    }
    PowerSet set(2, roots);
    const u64 x_max = 3600;
    if (!verify_bhg(set, h, g, h * x_max).ok) continue;
    ++checked;
    for (u64 x = 1; x <= x_max; ++x) {
      REQUIRE(static_cast<double>(count_up_to(set, x)) <= sidon_counting_bound(h, g, x));
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("boundedness_scan") {
  auto empty = boundedness_scan(PowerSet(2, {}), 2, 1000, 4);
  for (const auto& w : empty.windows) {
    CHECK(w.max_r == 0);
    CHECK(w.max_f[0] == 0);
  }
  CHECK(empty.verdict() == "no growth observed");

  auto squares = PowerSet::full(2, 1'000'000);
  auto rep = boundedness_scan(squares, 2, 1'000'000, 2);
  auto profile = representation_profile(1, 1'000'000, 2, Domain::of(squares));
  for (const auto& w : rep.windows) {
    std::uint32_t m = 0;
    for (u64 n = w.lo; n <= w.hi; ++n) m = std::max(m, profile.strict(n));
    CHECK(w.max_r == m);
    // pairs with a common sum are always disjoint, so f_2 = R_2
    CHECK(w.max_f[0] == m);
    CHECK(w.cross_check_ok);
  }
  CHECK(rep.windows.front().lo == 1);
  CHECK(rep.windows.back().hi == 1'000'000);

  auto sampled = sample_set(RandomModel::theorem2(2, 0.1, 9), 200000);
  ScanOptions threaded;
  threaded.threads = 3;
  auto a = boundedness_scan(sampled, 3, 200000, 5);
  auto b = boundedness_scan(sampled, 3, 200000, 5, threaded);
  REQUIRE(a.windows.size() == b.windows.size());
  for (std::size_t i = 0; i < a.windows.size(); ++i) {
    CHECK(a.windows[i].max_r == b.windows[i].max_r);
    CHECK(a.windows[i].max_f == b.windows[i].max_f);
    CHECK(a.windows[i].cross_check_ok);
  }
  CHECK_THROWS_AS(boundedness_scan(sampled, 2, 1000, 1), ArgumentError);
}

TEST_CASE("is_monotone_growth") {
  CHECK(is_monotone_growth({1, 2, 2, 3}));
  CHECK_FALSE(is_monotone_growth({2, 2, 2, 2}));
  CHECK_FALSE(is_monotone_growth({3, 2, 4, 5}));
}

TEST_CASE("greedy_bounded_subset golden outputs") {
  // frozen from an independent brute-force greedy that recounts every sum
  CHECK(roots_of(greedy_bounded_subset(2, 2, 1, 400).set) ==
        std::vector<u64>{1, 2, 3, 4, 5, 6, 8, 9, 10, 13, 16, 17});
  CHECK(roots_of(greedy_bounded_subset(2, 3, 1, 2000).set) ==
        std::vector<u64>{1, 2, 3, 4, 7, 11, 18, 20, 24, 31, 42});
  CHECK(roots_of(greedy_bounded_subset(3, 2, 1, 10000).set) ==
        std::vector<u64>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 17, 18, 19, 20, 21});
  CHECK(greedy_bounded_subset(2, 2, 1000, 400).set.size() == 20);
  CHECK(greedy_bounded_subset(2, 2, 1, 0).set.empty());
  auto probe = greedy_bounded_subset(2, 3, 1, 100000);
  CHECK(probe.density_exponent.has_value());
}

TEST_CASE("greedy output passes verify_bhg") {
  for (unsigned k : {2u, 3u}) {
    for (unsigned h : {2u, 3u}) {
      for (unsigned g : {1u, 2u}) {
        const u64 x_max = k == 2 ? 20000 : 200000;
        auto res = greedy_bounded_subset(k, h, g, x_max);
        CAPTURE(k); CAPTURE(h); CAPTURE(g);
        CHECK(verify_bhg(res.set, h, g, h * x_max).ok);
      }
    }
  }
}

TEST_CASE("every family of nine 2-sets on a small universe has a 3-sunflower") {
  for (u64 universe : {6u, 7u}) {
    std::vector<RootSet> pairs;
    for (u64 a = 0; a < universe; ++a) {
      for (u64 b = a + 1; b < universe; ++b) pairs.push_back({a, b});
    }
    std::size_t families = 0;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (pick.size() == 9) {
        std::vector<RootSet> H;
        for (auto i : pick) H.push_back(pairs[i]);
        auto res = find_delta_system(H, 3);
        REQUIRE(res.family);
        ++families;
        return;
      }
      for (std::size_t i = start; i + (9 - pick.size()) <= pairs.size(); ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    CHECK(families == (universe == 6 ? 5005u : 293930u));
  }
}
