#pragma once

#include <CLI11.hpp>
#include <deque>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "sidonpow/checked.hpp"

namespace sidonpow::cli {

using json = nlohmann::ordered_json;

/// One configuration value: a command-line flag, a key in the command's
/// section of the config file, and a default. The default's JSON type fixes
/// the value's type.
struct Knob {
  std::string key;
  json fallback;
  std::string text;
  bool switch_given = false;
  bool execution = false;  // affects where output goes, not what it contains
  CLI::Option* option = nullptr;
};

class Command {
 public:
  Command(CLI::App& parent, const std::string& name, const std::string& description);

  /// flags: CLI11 name string such as "-k" or "--x-max"; empty for file-only
  /// keys. Boolean defaults become switches.
  Command& knob(const std::string& flags, const std::string& key, json fallback,
                const std::string& help);
  Command& execution_knob(const std::string& flags, const std::string& key, json fallback,
                          const std::string& help);

  /// flag > file section > default, with type checks. Unknown file keys are
  /// rejected.
  json resolve(const json& file_section) const;
  /// The resolved values that determine results (execution knobs removed).
  json provenance(const json& resolved) const;

  const std::string& name() const noexcept { return name_; }
  CLI::App* app() const noexcept { return app_; }

 private:
  std::string name_;
  CLI::App* app_;
  std::deque<Knob> knobs_;
};

json load_config(const std::filesystem::path& path);

/// "a..b" (inclusive), "a,b,c", or a single integer.
std::vector<u64> parse_seed_list(const std::string& text);
std::vector<u64> seed_list(const json& value);

/// Files are written next to their destination and renamed on commit();
/// anything not committed is deleted on destruction.
class Outputs {
 public:
  Outputs() = default;
  Outputs(const Outputs&) = delete;
  Outputs& operator=(const Outputs&) = delete;
  ~Outputs();

  /// Opens a temporary stream for path; an empty path means "not requested".
  std::ostream* open(const std::string& path);
  void commit();

 private:
  struct Pending {
    std::filesystem::path target;
    std::filesystem::path temp;
    std::unique_ptr<std::ofstream> stream;
  };
  std::vector<Pending> pending_;
  bool committed_ = false;
};

/// %.17g
std::string format_double(double v);

}  // namespace sidonpow::cli
