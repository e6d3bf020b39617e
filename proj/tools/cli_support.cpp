#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "sidonpow/errors.hpp"

namespace sidonpow::cli {

namespace {

u64 parse_unsigned(const std::string& key, const std::string& text) {
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && ptr == text.data() + text.size()) return value;
  // accept 1e6 style when it is an exact integer
  double d = 0.0;
  auto [dptr, dec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (dec == std::errc() && dptr == text.data() + text.size() && d >= 0 && d < 0x1p64 &&
      std::floor(d) == d) {
    return static_cast<u64>(d);
  }
  throw ArgumentError(key + ": expected a nonnegative integer, got '" + text + "'");
}

double parse_real(const std::string& key, const std::string& text) {
  double d = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(d)) {
    throw ArgumentError(key + ": expected a real number, got '" + text + "'");
  }
  return d;
}

json from_text(const Knob& k) {
  const json& f = k.fallback;
  if (f.is_number_unsigned() || f.is_number_integer()) return parse_unsigned(k.key, k.text);
  if (f.is_number_float()) return parse_real(k.key, k.text);
  return k.text;
}

json checked_file_value(const Knob& k, const json& v) {
  const json& f = k.fallback;
  const std::string where = "config key '" + k.key + "'";
  if (f.is_number_unsigned() || f.is_number_integer()) {
    if (v.is_number_unsigned()) return v;
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<u64>();
    if (v.is_number_float()) {
      double d = v.get<double>();
      if (d >= 0 && d < 0x1p64 && std::floor(d) == d) return static_cast<u64>(d);
    }
    throw ArgumentError(where + ": expected a nonnegative integer");
  }
  if (f.is_number_float()) {
    if (!v.is_number()) throw ArgumentError(where + ": expected a number");
    return v.get<double>();
  }
  if (f.is_boolean()) {
    if (!v.is_boolean()) throw ArgumentError(where + ": expected true or false");
    return v;
  }
  if (f.is_array()) {
    if (!v.is_array()) throw ArgumentError(where + ": expected a list");
    return v;
  }
  if (k.key == "seeds" && v.is_array()) {
    seed_list(v);
    return v;
  }
  if (!v.is_string()) throw ArgumentError(where + ": expected a string");
  return v;
}

}  // namespace

Command::Command(CLI::App& parent, const std::string& name, const std::string& description)
    : name_(name), app_(parent.add_subcommand(name, description)) {}

Command& Command::knob(const std::string& flags, const std::string& key, json fallback,
                       const std::string& help) {
  Knob& k = knobs_.emplace_back();
  k.key = key;
  k.fallback = std::move(fallback);
  if (flags.empty()) return *this;
  std::string described = help + " (default: " +
                          (k.fallback.is_string() ? k.fallback.get<std::string>() : k.fallback.dump()) +
                          ")";
  if (k.fallback.is_boolean()) {
    k.option = app_->add_flag(flags, k.switch_given, described);
  } else {
    k.option = app_->add_option(flags, k.text, described);
    if (k.fallback.is_number_float()) k.option->type_name("REAL");
    else if (k.fallback.is_number()) k.option->type_name("UINT");
  }
  return *this;
}

Command& Command::execution_knob(const std::string& flags, const std::string& key,
                                 json fallback, const std::string& help) {
  knob(flags, key, std::move(fallback), help);
  knobs_.back().execution = true;
  return *this;
}

json Command::resolve(const json& file_section) const {
  if (!file_section.is_null() && !file_section.is_object()) {
    throw ArgumentError("config section '" + name_ + "' must be an object");
  }
  json out = json::object();
  for (const Knob& k : knobs_) {
    if (k.option && k.option->count() > 0) {
      out[k.key] = k.fallback.is_boolean() ? json(k.switch_given) : from_text(k);
    } else if (file_section.is_object() && file_section.contains(k.key)) {
      out[k.key] = checked_file_value(k, file_section.at(k.key));
    } else {
      out[k.key] = k.fallback;
    }
  }
  if (file_section.is_object()) {
    for (const auto& [key, value] : file_section.items()) {
      if (!out.contains(key)) {
        throw ArgumentError("config section '" + name_ + "': unknown key '" + key + "'");
      }
    }
  }
  return out;
}

json Command::provenance(const json& resolved) const {
  json out = json::object();
  for (const Knob& k : knobs_) {
    if (!k.execution) out[k.key] = resolved.at(k.key);
  }
  return out;
}

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path.string());
  json config;
  try {
    config = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("config file " + path.string() + ": " + e.what());
  }
  if (!config.is_object()) throw FormatError("config file must hold a JSON object");
  return config;
}

std::vector<u64> parse_seed_list(const std::string& text) {
  std::vector<u64> seeds;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    u64 a = parse_unsigned("seeds", text.substr(0, dots));
    u64 b = parse_unsigned("seeds", text.substr(dots + 2));
    if (b < a) throw ArgumentError("seeds: empty range '" + text + "'");
    if (b - a >= 1'000'000) throw ArgumentError("seeds: range too long");
    for (u64 s = a; s <= b; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    seeds.push_back(parse_unsigned("seeds", text.substr(start, comma - start)));
    start = comma + 1;
  }
  return seeds;
}

std::vector<u64> seed_list(const json& value) {
  if (value.is_string()) return parse_seed_list(value.get<std::string>());
  std::vector<u64> seeds;
  for (const auto& v : value) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      throw ArgumentError("seeds must be nonnegative integers");
    }
    seeds.push_back(v.get<u64>());
  }
  return seeds;
}

Outputs::~Outputs() {
  if (committed_) return;
  for (auto& p : pending_) {
    p.stream.reset();
    std::error_code ec;
    std::filesystem::remove(p.temp, ec);
  }
}

std::ostream* Outputs::open(const std::string& path) {
  if (path.empty()) return nullptr;
  Pending p;
  p.target = path;
  p.temp = p.target;
  p.temp += ".partial";
  p.stream = std::make_unique<std::ofstream>(p.temp, std::ios::binary | std::ios::trunc);
  if (!*p.stream) throw ResourceError("cannot write " + p.temp.string());
  pending_.push_back(std::move(p));
  return pending_.back().stream.get();
}

void Outputs::commit() {
  for (auto& p : pending_) {
    p.stream->flush();
    if (!*p.stream) throw ResourceError("write failed for " + p.target.string());
    p.stream.reset();
  }
  for (auto& p : pending_) std::filesystem::rename(p.temp, p.target);
  committed_ = true;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace sidonpow::cli
