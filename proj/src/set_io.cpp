#include "sidonpow/set_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sidonpow {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

u64 parse_u64(const std::string& text, std::size_t line) {
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError("line " + std::to_string(line) + ": expected a decimal integer, got '" +
                      text + "'");
  }
  return value;
}

}  // namespace

void write_power_set(std::ostream& out, const PowerSet& set,
                     const std::vector<std::string>& comments) {
  out << "k=" << set.k() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (u64 r : set.roots()) out << r << '\n';
}

PowerSet read_power_set(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<unsigned> k;
  std::vector<u64> roots;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!k) {
      if (line.rfind("k=", 0) != 0) {
        throw FormatError("line " + std::to_string(line_no) + ": expected 'k=<integer>' header");
      }
      u64 kv = parse_u64(line.substr(2), line_no);
      if (kv < 1 || kv > 64) throw FormatError("k must lie in [1, 64]");
      k = static_cast<unsigned>(kv);
      continue;
    }
    u64 root = parse_u64(line, line_no);
    if (root < 1) throw FormatError("line " + std::to_string(line_no) + ": roots must be >= 1");
    if (!roots.empty() && root <= roots.back()) {
      throw FormatError("line " + std::to_string(line_no) + ": root " + std::to_string(root) +
                        (root == roots.back() ? " is a duplicate" : " is out of order"));
    }
    roots.push_back(root);
  }
  if (!k) throw FormatError("missing 'k=<integer>' header");
  try {
    return PowerSet(*k, std::move(roots));
  } catch (const RangeError& e) {
    throw FormatError(std::string("root too large: ") + e.what());
  }
}

PowerSet load_power_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open set file " + path.string());
  return read_power_set(in);
}

std::vector<RootSet> read_set_collection(std::istream& in) {
  std::vector<RootSet> sets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream tokens(line);
    std::string tok;
    RootSet s;
    while (tokens >> tok) s.push_back(parse_u64(tok, line_no));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }
  return sets;
}

std::vector<RootSet> load_set_collection(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open set collection " + path.string());
  return read_set_collection(in);
}

}  // namespace sidonpow
