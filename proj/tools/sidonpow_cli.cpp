// sidonpow: experiment harness over the sidonpow library.
//
// Every subcommand resolves its parameters as flag > config file section >
// default, writes its artifacts through temporary files, and prints one
// summary line. Errors go to stderr as JSON with a nonzero exit status.

#include <algorithm>
#include <iostream>
#include <random>

#include "cli_support.hpp"
#include "sidonpow/bhg.hpp"
#include "sidonpow/boundedness.hpp"
#include "sidonpow/concentration.hpp"
#include "sidonpow/density.hpp"
#include "sidonpow/errors.hpp"
#include "sidonpow/expectation.hpp"
#include "sidonpow/fit.hpp"
#include "sidonpow/greedy.hpp"
#include "sidonpow/oracles.hpp"
#include "sidonpow/packing.hpp"
#include "sidonpow/profile.hpp"
#include "sidonpow/sampling.hpp"
#include "sidonpow/set_io.hpp"
#include "sidonpow/sunflower.hpp"

using namespace sidonpow;
using namespace sidonpow::cli;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct Run {
  const json& cfg;
  Outputs& outputs;
  json result = json::object();
  std::string summary;
  int exit_code = 0;
};

unsigned as_unsigned(const json& cfg, const char* key) {
  u64 v = cfg.at(key).get<u64>();
  if (v > 1'000'000) throw ArgumentError(std::string(key) + " is out of range");
  return static_cast<unsigned>(v);
}

u64 as_u64(const json& cfg, const char* key) { return cfg.at(key).get<u64>(); }
double as_double(const json& cfg, const char* key) { return cfg.at(key).get<double>(); }
std::string as_string(const json& cfg, const char* key) { return cfg.at(key).get<std::string>(); }

// ---------------------------------------------------------------------------
// shared knob groups

void model_knobs(Command& c) {
  c.knob("--model", "model", "theorem2", "theorem2, theorem3 or table")
      .knob("--epsilon", "epsilon", 0.1, "epsilon of the power-law models")
      .knob("--model-h", "model_h", 5u, "h of the theorem3 model")
      .knob("--seed", "seed", 0u, "sampling seed")
      .knob("--alpha", "alpha", 1.0, "table model: probability on every k-th power without a table entry")
      .knob("", "table", json::array(), "table model: [[n, alpha], ...] (config file only)");
}

RandomModel build_model(const json& cfg, u64 constant_limit) {
  unsigned k = as_unsigned(cfg, "k");
  u64 seed = as_u64(cfg, "seed");
  switch (parse_model_kind(as_string(cfg, "model"))) {
    case ModelKind::theorem2:
      return RandomModel::theorem2(k, as_double(cfg, "epsilon"), seed);
    case ModelKind::theorem3:
      return RandomModel::theorem3(k, as_unsigned(cfg, "model_h"), as_double(cfg, "epsilon"), seed);
    case ModelKind::table:
      break;
  }
  const json& table = cfg.at("table");
  if (table.empty()) return RandomModel::constant_table(k, as_double(cfg, "alpha"), constant_limit, seed);
  std::vector<std::pair<u64, double>> entries;
  for (const auto& e : table) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number()) {
      throw ArgumentError("table entries must be [n, alpha] pairs");
    }
    entries.emplace_back(e[0].get<u64>(), e[1].get<double>());
  }
  return RandomModel::table(k, std::move(entries), seed);
}

void set_source_knobs(Command& c, const char* fallback) {
  c.knob("--set", "set", fallback, "set file path, 'full' (all k-th powers) or 'model' (sampled)");
  model_knobs(c);
}

/// The analysed set, limited to values <= limit.
PowerSet obtain_set(const json& cfg, u64 limit, unsigned threads) {
  std::string source = as_string(cfg, "set");
  unsigned k = as_unsigned(cfg, "k");
  if (source == "full") return PowerSet::full(k, limit);
  if (source == "model") {
    SampleOptions opts;
    opts.threads = threads;
    return sample_set(build_model(cfg, limit), limit, opts);
  }
  PowerSet set = load_power_set(source);
  if (set.k() != k) {
    throw ArgumentError("set file has k=" + std::to_string(set.k()) + " but k=" + std::to_string(k) +
                        " was requested");
  }
  return set.restricted_to(limit);
}

void output_knobs(Command& c, const std::string& out, bool with_report) {
  c.execution_knob("--threads", "threads", 1u, "worker threads");
  c.execution_knob("--out", "out", out, "primary output path");
  if (with_report) c.execution_knob("--report", "report", "", "JSON report path (empty: none)");
}

ProfileStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return ProfileStrategy::automatic;
  if (s == "sweep") return ProfileStrategy::sweep;
  if (s == "mitm") return ProfileStrategy::meet_in_the_middle;
  throw ArgumentError("strategy must be auto, sweep or mitm");
}

json roots_json(const RootSet& s) { return json(s); }

std::string csv_header(const std::vector<std::string>& cols) {
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  return out + "\n";
}

// ---------------------------------------------------------------------------
// subcommands

void run_profile(Run& r) {
  const json& cfg = r.cfg;
  unsigned k = as_unsigned(cfg, "k");
  unsigned h = as_unsigned(cfg, "order");
  u64 lo = as_u64(cfg, "lo"), hi = as_u64(cfg, "hi");
  ProfileOptions opts;
  opts.strategy = parse_strategy(as_string(cfg, "strategy"));
  opts.max_bytes = as_u64(cfg, "max_bytes");
  opts.threads = as_unsigned(cfg, "threads");
  std::string source = as_string(cfg, "set");
  Domain domain = Domain::full(k);
  if (source != "full") {
    PowerSet set = load_power_set(source);
    if (set.k() != k) throw ArgumentError("set file k differs from requested k");
    domain = Domain::of(std::move(set));
  }
  auto profile = representation_profile(lo, hi, h, domain, opts);

  std::ostream& out = *r.outputs.open(as_string(cfg, "out"));
  out << csv_header({"n", "strict", "weak"});
  std::uint32_t max_strict = 0, max_weak = 0;
  u64 arg_strict = lo, arg_weak = lo;
  for (u64 n = lo; n <= hi; ++n) {
    std::uint32_t s = profile.strict(n), w = profile.weak(n);
    out << n << ',' << s << ',' << w << '\n';
    if (s > max_strict) max_strict = s, arg_strict = n;
    if (w > max_weak) max_weak = w, arg_weak = n;
  }
  r.result = {{"domain", profile.domain()},
              {"max_strict", max_strict},
              {"argmax_strict", arg_strict},
              {"max_weak", max_weak},
              {"argmax_weak", arg_weak}};
  r.summary = "profile " + profile.domain() + " h=" + std::to_string(h) + " on [" +
              std::to_string(lo) + ", " + std::to_string(hi) + "]: max R=" +
              std::to_string(max_strict) + " max R*=" + std::to_string(max_weak);
}

void run_sample(Run& r) {
  const json& cfg = r.cfg;
  u64 x_max = as_u64(cfg, "x_max");
  RandomModel model = build_model(cfg, x_max);
  SampleOptions opts;
  opts.threads = as_unsigned(cfg, "threads");
  PowerSet set = sample_set(model, x_max, opts);
  write_power_set(*r.outputs.open(as_string(cfg, "out")), set,
                  {model.describe(), "x_max=" + std::to_string(x_max)});
  r.result = {{"model", model.describe()},
              {"size", set.size()},
              {"largest_root", set.empty() ? 0 : set.roots().back()}};
  r.summary = "sampled " + std::to_string(set.size()) + " elements up to " + std::to_string(x_max);
}

void run_expect(Run& r) {
  const json& cfg = r.cfg;
  u64 x_hi = as_u64(cfg, "x_hi");
  RandomModel model = build_model(cfg, std::max(x_hi, as_u64(cfg, "n_hi")));

  std::ostream& out = *r.outputs.open(as_string(cfg, "out"));
  out << csv_header({"x", "exact", "closed_form", "gap"});
  auto grid = geometric_grid(as_u64(cfg, "x_lo"), x_hi, as_unsigned(cfg, "per_decade"));
  for (u64 x : grid) {
    auto e = expected_count(model, x);
    out << x << ',' << format_double(e.exact) << ',';
    if (e.closed_form) out << format_double(*e.closed_form) << ',' << format_double(e.exact - *e.closed_form);
    else out << ',';
    out << '\n';
  }

  unsigned l = as_unsigned(cfg, "parts");
  auto n_grid = geometric_grid(as_u64(cfg, "n_lo"), as_u64(cfg, "n_hi"), as_unsigned(cfg, "per_decade"));
  json decay = {{"parts", l}};
  try {
    auto fit = expectation_decay_fit(model, l, n_grid);
    decay["slope"] = fit.slope;
    decay["intercept"] = fit.intercept;
    decay["points"] = fit.points.size() - fit.dropped.size();
    decay["dropped"] = fit.dropped;
  } catch (const FitError& e) {
    decay["error"] = e.what();
  }
  r.result["decay"] = decay;
  if (u64 n = as_u64(cfg, "n"); n > 0) {
    r.result["expected_representations"] = {{"n", n}, {"parts", l},
                                            {"value", expected_representation_count(model, n, l)}};
  }
  r.summary = "expected counts on " + std::to_string(grid.size()) + " grid points";
  if (decay.contains("slope")) r.summary += ", decay slope " + format_double(decay["slope"]);
}

void run_pack(Run& r) {
  const json& cfg = r.cfg;
  u64 n = as_u64(cfg, "n");
  unsigned l = as_unsigned(cfg, "parts");
  PowerSet set = obtain_set(cfg, n, as_unsigned(cfg, "threads"));
  std::string mode = as_string(cfg, "mode");
  if (mode != "exact" && mode != "greedy") throw ArgumentError("mode must be exact or greedy");
  PackingResult res;
  bool capped = false;
  try {
    res = max_disjoint_representations(n, l, set,
                                       mode == "exact" ? PackingMode::exact : PackingMode::greedy,
                                       as_u64(cfg, "cap"));
  } catch (const PackingCapExceeded& e) {
    res = e.greedy();
    capped = true;
  }
  json witness = json::array();
  for (const auto& w : res.witness) witness.push_back(roots_json(w));
  r.result = {{"n", n}, {"parts", l}, {"f_value", res.f_value}, {"exact", res.exact},
              {"cap_exceeded", capped}, {"witness", witness}};
  r.summary = "f_" + std::to_string(l) + "(" + std::to_string(n) + ") " + (res.exact ? "= " : ">= ") +
              std::to_string(res.f_value);
}

std::vector<RootSet> random_collection(std::size_t count, std::size_t size, u64 universe, u64 seed) {
  if (size == 0 || size > universe) throw ArgumentError("need 1 <= size <= universe");
  std::mt19937_64 rng(seed);
  std::vector<RootSet> sets;
  std::size_t attempts = 0;
  while (sets.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw ArgumentError("cannot draw that many distinct sets");
    RootSet s;
    while (s.size() < size) {
      u64 x = rng() % universe;
      if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
    }
    std::sort(s.begin(), s.end());
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(std::move(s));
  }
  return sets;
}

void run_sunflower(Run& r) {
  const json& cfg = r.cfg;
  std::string path = as_string(cfg, "sets");
  std::vector<RootSet> sets = path.empty()
      ? random_collection(as_u64(cfg, "count"), as_u64(cfg, "size"), as_u64(cfg, "universe"),
                          as_u64(cfg, "seed"))
      : load_set_collection(path);
  std::size_t petals = as_u64(cfg, "petals");
  std::size_t largest = 0;
  for (const auto& s : sets) largest = std::max(largest, s.size());
  auto res = find_delta_system(sets, petals);
  r.result = {{"sets", sets.size()},
              {"largest_set", largest},
              {"threshold", sunflower_threshold(petals, largest)},
              {"found", res.family.has_value()},
              {"complete", res.complete}};
  if (res.family) {
    json ps = json::array();
    for (const auto& p : res.family->petals) ps.push_back(roots_json(p));
    r.result["core"] = roots_json(res.family->core);
    r.result["petals"] = ps;
    r.result["indices"] = res.family->indices;
    r.summary = "found a " + std::to_string(petals) + "-sunflower with core size " +
                std::to_string(res.family->core.size());
  } else {
    r.summary = res.complete ? "no " + std::to_string(petals) + "-sunflower exists"
                             : "none found (search not exhaustive)";
  }
}

void run_verify(Run& r) {
  const json& cfg = r.cfg;
  unsigned h = as_unsigned(cfg, "order");
  unsigned g = as_unsigned(cfg, "g");
  u64 x_max = as_u64(cfg, "x_max");
  ProfileOptions popts;
  popts.threads = as_unsigned(cfg, "threads");
  PowerSet set = obtain_set(cfg, x_max, popts.threads);
  u64 n_max = as_u64(cfg, "n_max");
  if (n_max == 0) n_max = std::max<u64>(1, h * (set.empty() ? 1 : set.values().back()));
  auto verdict = verify_bhg(set, h, g, n_max, popts);

  // A(x) only steps at elements, where it is compared with the bound
  std::size_t bound_violations = 0;
  json worst = nullptr;
  double worst_ratio = 0.0;
  auto values = set.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    double x = static_cast<double>(values[i]);
    double bound = sidon_counting_bound(h, g, x);
    double a = static_cast<double>(i + 1);
    if (a > bound) ++bound_violations;
    if (a / bound > worst_ratio) {
      worst_ratio = a / bound;
      worst = {{"x", values[i]}, {"count", i + 1}, {"bound", bound}};
    }
  }
  r.result = {{"size", set.size()}, {"n_max", n_max}, {"ok", verdict.ok}};
  if (verdict.violation_n) {
    r.result["violation"] = {{"n", *verdict.violation_n}, {"count", verdict.violation_count}};
  }
  r.result["counting_bound"] = {{"checked_points", values.size()},
                                {"violations", bound_violations},
                                {"tightest", worst}};
  if (!verdict.ok) {
    r.exit_code = kExitViolation;
    r.summary = "not B_" + std::to_string(h) + "[" + std::to_string(g) + "]: n=" +
                std::to_string(*verdict.violation_n) + " has " +
                std::to_string(verdict.violation_count) + " representations";
  } else {
    r.summary = "B_" + std::to_string(h) + "[" + std::to_string(g) + "] holds up to " +
                std::to_string(n_max);
  }
}

void run_scan(Run& r) {
  const json& cfg = r.cfg;
  unsigned h = as_unsigned(cfg, "order");
  u64 n_max = as_u64(cfg, "n_max");
  ScanOptions opts;
  opts.threads = as_unsigned(cfg, "threads");
  opts.profile.threads = opts.threads;
  opts.packing_cap = as_u64(cfg, "cap");
  PowerSet set = obtain_set(cfg, n_max, opts.threads);
  auto rep = boundedness_scan(set, h, n_max, as_u64(cfg, "windows"), opts);

  std::ostream& out = *r.outputs.open(as_string(cfg, "out"));
  std::vector<std::string> cols{"lo", "hi", "max_r"};
  for (unsigned l = 2; l <= h; ++l) cols.push_back("max_f" + std::to_string(l));
  for (const char* c : {"packing_bound", "cross_check_ok", "greedy_fallback"}) cols.push_back(c);
  out << csv_header(cols);
  json windows = json::array();
  for (const auto& w : rep.windows) {
    out << w.lo << ',' << w.hi << ',' << w.max_r;
    for (auto f : w.max_f) out << ',' << f;
    out << ',' << format_double(w.packing_bound) << ',' << w.cross_check_ok << ','
        << w.greedy_fallback << '\n';
    windows.push_back({{"lo", w.lo}, {"hi", w.hi}, {"max_r", w.max_r}, {"max_f", w.max_f},
                       {"packing_bound", w.packing_bound}, {"cross_check_ok", w.cross_check_ok},
                       {"greedy_fallback", w.greedy_fallback}});
  }
  r.result = {{"size", set.size()},
              {"verdict", rep.verdict()},
              {"growth_observed", rep.growth_observed},
              {"all_cross_checks_ok", rep.all_cross_checks_ok},
              {"windows", windows}};
  r.summary = rep.verdict() + (rep.all_cross_checks_ok ? ", packing cross-check ok"
                                                       : ", packing cross-check FAILED");
}

void run_density(Run& r) {
  const json& cfg = r.cfg;
  u64 x_hi = as_u64(cfg, "x_hi");
  PowerSet set = obtain_set(cfg, x_hi, as_unsigned(cfg, "threads"));
  auto grid = geometric_grid(as_u64(cfg, "x_lo"), x_hi, as_unsigned(cfg, "per_decade"));
  auto fit = fit_density_exponent(set, grid);
  std::optional<RandomModel> model;
  if (as_string(cfg, "set") == "model") model = build_model(cfg, x_hi);

  std::ostream& out = *r.outputs.open(as_string(cfg, "out"));
  out << csv_header({"x", "count", "expected", "deviation"});
  for (u64 x : grid) {
    u64 a = count_up_to(set, x);
    out << x << ',' << a << ',';
    if (model) {
      double e = expected_count(*model, x).exact;
      out << format_double(e) << ',' << format_double(static_cast<double>(a) - e);
    } else {
      out << ',';
    }
    out << '\n';
  }
  r.result = {{"size", set.size()},
              {"exponent", fit.exponent},
              {"intercept", fit.intercept},
              {"residual", fit.residual},
              {"dropped", fit.dropped}};
  if (model && model->density_exponent()) r.result["predicted_exponent"] = *model->density_exponent();
  r.summary = "density exponent " + format_double(fit.exponent);
}

void run_concentrate(Run& r) {
  const json& cfg = r.cfg;
  u64 x = as_u64(cfg, "x");
  RandomModel model = build_model(cfg, x);
  auto seeds = seed_list(cfg.at("seeds"));
  ConcentrationOptions opts;
  opts.threads = as_unsigned(cfg, "threads");
  auto rep = concentration_trial(model, x, seeds, opts);

  std::ostream& out = *r.outputs.open(as_string(cfg, "out"));
  out << csv_header({"seed", "count", "expected", "deviation", "violation"});
  const double threshold = rep.delta * rep.expected;
  for (std::size_t i = 0; i < rep.seeds.size(); ++i) {
    double dev = static_cast<double>(rep.counts[i]) - rep.expected;
    out << rep.seeds[i] << ',' << rep.counts[i] << ',' << format_double(rep.expected) << ','
        << format_double(dev) << ',' << (std::abs(dev) >= threshold) << '\n';
  }
  r.result = {{"x", rep.x},
              {"trials", rep.trials},
              {"expected", rep.expected},
              {"delta", rep.delta},
              {"violations", rep.violations},
              {"violation_fraction", rep.violation_fraction},
              {"chernoff_bound", rep.chernoff_bound},
              {"inverse_square_bound", rep.inverse_square_bound},
              {"max_abs_deviation", rep.max_abs_deviation},
              {"flagged", rep.flagged}};
  r.summary = std::to_string(rep.violations) + " of " + std::to_string(rep.trials) +
              " trials deviate by delta*E or more" + (rep.flagged ? " (flagged: delta >= 2)" : "");
}

void run_oracle(Run& r) {
  const json& cfg = r.cfg;
  std::string mode = as_string(cfg, "mode");
  unsigned k = as_unsigned(cfg, "k");
  u64 max = as_u64(cfg, "max");
  ProfileOptions popts;
  popts.threads = as_unsigned(cfg, "threads");
  std::ostream& out = *r.outputs.open(as_string(cfg, "out"));

  if (mode == "taxicab") {
    auto hits = taxicab_scan(k, max, as_unsigned(cfg, "threshold"), popts);
    out << csv_header({"n", "count"});
    for (const auto& hit : hits) out << hit.n << ',' << hit.count << '\n';
    r.result = {{"hits", hits.size()}};
    if (!hits.empty()) r.result["first"] = hits.front().n;
    r.summary = std::to_string(hits.size()) + " values up to " + std::to_string(max) + " with at least " +
                std::to_string(as_unsigned(cfg, "threshold")) + " representations";
  } else if (mode == "divisor") {
    u64 lo = 2, hi = max;
    if (u64 n = as_u64(cfg, "n"); n > 0) lo = hi = n;
    out << csv_header({"n", "weak_count", "divisor_count", "ok", "unique_per_divisor"});
    u64 checked = 0, failures = 0, max_weak = 0;
    for (u64 n = lo; n <= hi; ++n) {
      auto c = divisor_bound_check(k, n);
      ++checked;
      if (!c.ok || !c.unique_per_divisor) ++failures;
      max_weak = std::max(max_weak, c.weak_count);
      if (c.weak_count > 0 || lo == hi) {
        out << n << ',' << c.weak_count << ',' << c.divisor_count << ',' << c.ok << ','
            << c.unique_per_divisor << '\n';
      }
    }
    r.result = {{"checked", checked}, {"failures", failures}, {"max_weak_count", max_weak}};
    r.summary = std::to_string(failures) + " divisor-bound failures in " + std::to_string(checked) +
                " values";
  } else if (mode == "sieve") {
    out << csv_header({"x", "count", "normalized"});
    std::vector<u64> points;
    for (u64 x = 100; x < max; x *= 10) points.push_back(x);
    points.push_back(max);
    json rows = json::array();
    for (u64 x : points) {
      auto s = sum_two_squares_sieve(x);
      out << x << ',' << s.count << ',' << format_double(s.normalized) << '\n';
      rows.push_back({{"x", x}, {"count", s.count}, {"normalized", s.normalized}});
    }
    r.result = {{"points", rows}, {"landau_ramanujan", kLandauRamanujan}};
    r.summary = "sums of two squares up to " + std::to_string(max) + ": " +
                std::to_string(rows.back()["count"].get<u64>());
  } else if (mode == "hypothesis-k") {
    auto rep = hypothesis_k_scan(k, as_unsigned(cfg, "order"), max, as_double(cfg, "eta"),
                                 as_u64(cfg, "n_min"), popts);
    out << csv_header({"n", "count"});
    for (const auto& v : rep.violations) out << v.n << ',' << v.count << '\n';
    r.result = {{"max_ratio", rep.max_ratio}, {"worst_n", rep.worst_n},
                {"violations", rep.violations.size()}};
    r.summary = std::to_string(rep.violations.size()) + " values with R(n) >= n^eta, max ratio " +
                format_double(rep.max_ratio);
  } else {
    throw ArgumentError("oracle mode must be taxicab, divisor, sieve or hypothesis-k");
  }
}

void run_greedy(Run& r) {
  const json& cfg = r.cfg;
  unsigned k = as_unsigned(cfg, "k"), h = as_unsigned(cfg, "order"), g = as_unsigned(cfg, "g");
  u64 x_max = as_u64(cfg, "x_max");
  auto res = greedy_bounded_subset(k, h, g, x_max);
  write_power_set(*r.outputs.open(as_string(cfg, "out")), res.set,
                  {"greedy B_" + std::to_string(h) + "[" + std::to_string(g) + "] k=" +
                       std::to_string(k),
                   "x_max=" + std::to_string(x_max)});
  r.result = {{"size", res.set.size()}};
  if (res.density_exponent) r.result["density_exponent"] = *res.density_exponent;
  r.summary = "greedy set of " + std::to_string(res.set.size()) + " elements";
  if (res.density_exponent) r.summary += ", density exponent " + format_double(*res.density_exponent);
}

// ---------------------------------------------------------------------------

struct Entry {
  Command* command;
  void (*run)(Run&);
  bool json_output;  // primary output is the JSON report itself
};

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ArgumentError*>(&e)) return "ArgumentError";
  if (dynamic_cast<const RangeError*>(&e)) return "RangeError";
  if (dynamic_cast<const ResourceError*>(&e)) return "ResourceError";
  if (dynamic_cast<const FitError*>(&e)) return "FitError";
  if (dynamic_cast<const FormatError*>(&e)) return "FormatError";
  if (dynamic_cast<const CLI::ParseError*>(&e)) return "UsageError";
  return "Error";
}

int report_error(const std::string& type, const std::string& message) {
  json err = {{"error", {{"type", type}, {"message", message}}}};
  std::cerr << err.dump() << '\n';
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random sets of perfect powers: representation counts, sampling and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file with one section per subcommand");

  std::deque<Command> commands;
  std::vector<Entry> entries;
  auto add = [&](const char* name, const char* description, void (*run)(Run&), bool json_output) {
    Command& c = commands.emplace_back(app, name, description);
    entries.push_back({&c, run, json_output});
    return &c;
  };

  add("profile", "representation counts R and R* for every n in a range", run_profile, false)
      ->knob("-k", "k", 2u, "power")
      .knob("--order", "order", 2u, "number of summands h")
      .knob("--lo", "lo", 1u, "first n")
      .knob("--hi", "hi", 1'000'000u, "last n")
      .knob("--set", "set", "full", "'full' or a set file path")
      .knob("--strategy", "strategy", "auto", "auto, sweep or mitm")
      .knob("--max-bytes", "max_bytes", u64{1} << 30, "memory budget for count tables");
  output_knobs(commands.back(), "sidonpow-profile.csv", true);

  Command* c = add("sample", "sample one realization of a random model", run_sample, false);
  c->knob("-k", "k", 2u, "power").knob("--x-max", "x_max", 1'000'000u, "largest value");
  model_knobs(*c);
  output_knobs(*c, "sidonpow-sample.txt", true);

  c = add("expect", "exact and closed-form expectations, and the decay of E[R_l(n)]", run_expect, false);
  c->knob("-k", "k", 2u, "power")
      .knob("--x-lo", "x_lo", 1000u, "first x of the E[A(x)] grid")
      .knob("--x-hi", "x_hi", 100'000'000u, "last x of the E[A(x)] grid")
      .knob("--per-decade", "per_decade", 12u, "grid points per decade")
      .knob("--parts", "parts", 2u, "summands l for E[R_l(n)]")
      .knob("--n-lo", "n_lo", 1000u, "first n of the decay grid")
      .knob("--n-hi", "n_hi", 1'000'000u, "last n of the decay grid")
      .knob("--n", "n", 0u, "also report E[R_l(n)] at this n (0: skip)");
  model_knobs(*c);
  output_knobs(*c, "sidonpow-expect.csv", true);

  c = add("pack", "largest family of disjoint representations f_l(n)", run_pack, true);
  c->knob("-k", "k", 2u, "power")
      .knob("--n", "n", 325u, "target")
      .knob("--parts", "parts", 2u, "summands l")
      .knob("--mode", "mode", "exact", "exact or greedy")
      .knob("--cap", "cap", u64{kDefaultPackingCap}, "largest representation list solved exactly");
  set_source_knobs(*c, "full");
  output_knobs(*c, "sidonpow-pack.json", false);

  c = add("sunflower", "search a set family for an r-sunflower", run_sunflower, true);
  c->knob("--sets", "sets", "", "set collection file (empty: random family)")
      .knob("--petals", "petals", 3u, "petal count r")
      .knob("--count", "count", 9u, "random family: number of sets")
      .knob("--size", "size", 2u, "random family: set size")
      .knob("--universe", "universe", 12u, "random family: universe size")
      .knob("--seed", "seed", 0u, "random family: seed");
  output_knobs(*c, "sidonpow-sunflower.json", false);

  c = add("verify", "check the B_h[g] property and the counting bound", run_verify, true);
  c->knob("-k", "k", 2u, "power")
      .knob("--order", "order", 2u, "h")
      .knob("--g", "g", 1u, "g")
      .knob("--x-max", "x_max", 10'000u, "largest element considered")
      .knob("--n-max", "n_max", 0u, "largest n checked (0: h times the largest element)");
  set_source_knobs(*c, "model");
  output_knobs(*c, "sidonpow-verify.json", false);

  c = add("scan", "windowed maxima of R_h and f_l with the packing cross-check", run_scan, false);
  c->knob("-k", "k", 2u, "power")
      .knob("--order", "order", 2u, "h")
      .knob("--n-max", "n_max", 1'000'000u, "end of the scanned range")
      .knob("--windows", "windows", 4u, "number of equal windows")
      .knob("--cap", "cap", u64{kDefaultPackingCap}, "largest representation list packed exactly");
  set_source_knobs(*c, "model");
  output_knobs(*c, "sidonpow-scan.csv", true);

  c = add("density", "A(x) on a geometric grid and its log-log slope", run_density, false);
  c->knob("-k", "k", 2u, "power")
      .knob("--x-lo", "x_lo", 10'000u, "first grid point")
      .knob("--x-hi", "x_hi", 100'000'000u, "last grid point")
      .knob("--per-decade", "per_decade", 12u, "grid points per decade");
  set_source_knobs(*c, "model");
  output_knobs(*c, "sidonpow-density.csv", true);

  c = add("concentrate", "deviation of A(x) from its mean over many seeds", run_concentrate, false);
  c->knob("-k", "k", 2u, "power")
      .knob("--x", "x", 1'000'000u, "scale x")
      .knob("--seeds", "seeds", "0..99", "seed list: a..b or a,b,c");
  model_knobs(*c);
  output_knobs(*c, "sidonpow-concentrate.csv", true);

  c = add("oracle", "classical checks: taxicab, divisor bound, two-squares sieve, Hypothesis K", run_oracle,
          false);
  bool taxicab = false, divisor = false, sieve = false, hypothesis_k = false;
  c->app()->add_flag("--taxicab", taxicab, "values with at least --threshold representations");
  c->app()->add_flag("--divisor", divisor, "R* <= d(n) for odd k over [2, max] or at --n");
  c->app()->add_flag("--sieve", sieve, "count sums of two squares");
  c->app()->add_flag("--hypothesis-k", hypothesis_k, "R_h(n) against n^eta");
  c->knob("", "mode", "taxicab", "taxicab, divisor, sieve or hypothesis-k")
      .knob("-k", "k", 3u, "power")
      .knob("--max", "max", 20'000u, "upper end of the range")
      .knob("--threshold", "threshold", 2u, "taxicab: minimum representation count")
      .knob("--n", "n", 0u, "divisor: single n (0: scan [2, max])")
      .knob("--order", "order", 2u, "hypothesis-k: h")
      .knob("--eta", "eta", 0.5, "hypothesis-k: exponent")
      .knob("--n-min", "n_min", 2u, "hypothesis-k: first n");
  output_knobs(*c, "sidonpow-oracle.csv", true);

  c = add("greedy", "greedy B_h[g] subset of the k-th powers", run_greedy, false);
  c->knob("-k", "k", 2u, "power")
      .knob("--order", "order", 2u, "h")
      .knob("--g", "g", 1u, "g")
      .knob("--x-max", "x_max", 1'000'000u, "largest value");
  output_knobs(*c, "sidonpow-greedy.txt", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("UsageError", e.what());
  }

  for (const Entry& entry : entries) {
    Command& command = *entry.command;
    if (!command.app()->parsed()) continue;
    try {
      json file = config_path.empty() ? json::object() : load_config(config_path);
      json cfg = command.resolve(file.contains(command.name()) ? file.at(command.name()) : json());
      if (command.name() == "oracle") {
        int chosen = taxicab + divisor + sieve + hypothesis_k;
        if (chosen > 1) throw ArgumentError("choose one of --taxicab, --divisor, --sieve, --hypothesis-k");
        if (taxicab) cfg["mode"] = "taxicab";
        if (divisor) cfg["mode"] = "divisor";
        if (sieve) cfg["mode"] = "sieve";
        if (hypothesis_k) cfg["mode"] = "hypothesis-k";
      }
      if (as_unsigned(cfg, "threads") < 1) throw ArgumentError("threads must be >= 1");
      if (as_string(cfg, "out").empty()) throw ArgumentError("out must not be empty");

      Outputs outputs;
      Run run{cfg, outputs, json::object(), {}, 0};
      entry.run(run);
      json report = {{"command", command.name()},
                     {"config", command.provenance(cfg)},
                     {"result", run.result}};
      if (entry.json_output) {
        *outputs.open(as_string(cfg, "out")) << report.dump(2) << '\n';
      } else if (std::ostream* rep = outputs.open(as_string(cfg, "report"))) {
        *rep << report.dump(2) << '\n';
      }
      outputs.commit();
      std::cout << command.name() << ": " << run.summary << '\n';
      return run.exit_code;
    } catch (const std::exception& e) {
      return report_error(error_type(e), e.what());
    }
  }
  return report_error("UsageError", "no subcommand");
}
