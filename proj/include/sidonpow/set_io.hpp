#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sidonpow/power_set.hpp"
#include "sidonpow/sunflower.hpp"

namespace sidonpow {

// PowerSet text format:
//   k=<integer>
//   # optional comment lines
//   <root>            one per line, strictly ascending decimal

void write_power_set(std::ostream& out, const PowerSet& set,
                     const std::vector<std::string>& comments = {});
PowerSet read_power_set(std::istream& in);
PowerSet load_power_set(const std::filesystem::path& path);

/// One set per line as whitespace-separated integers; '#' starts a comment.
std::vector<RootSet> read_set_collection(std::istream& in);
std::vector<RootSet> load_set_collection(const std::filesystem::path& path);

}  // namespace sidonpow
