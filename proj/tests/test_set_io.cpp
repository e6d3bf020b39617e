#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sidonpow/sampling.hpp"
#include "sidonpow/set_io.hpp"

using namespace sidonpow;

namespace {

PowerSet parse(const std::string& text) {
  std::istringstream in(text);
  return read_power_set(in);
}

}  // namespace

TEST_CASE("power set round trip") {
  auto set = sample_set(RandomModel::theorem2(3, 0.2, 4), 1'000'000'000);
  std::ostringstream out;
  write_power_set(out, set, {"model theorem2", "x_max 1000000000"});
  const std::string text = out.str();
  CHECK(text.rfind("k=3\n# model theorem2\n# x_max 1000000000\n", 0) == 0);
  CHECK(parse(text) == set);

  std::ostringstream again;
  write_power_set(again, parse(text), {"model theorem2", "x_max 1000000000"});
  CHECK(again.str() == text);

  std::ostringstream empty;
  write_power_set(empty, PowerSet(2, {}));
  CHECK(empty.str() == "k=2\n");
  CHECK(parse(empty.str()).roots().empty());
}

TEST_CASE("reader tolerates blank lines, comments and whitespace") {
  auto set = parse("# leading comment\n\nk=2\n  1\n# mid\n4 \r\n\n9\n");
  CHECK(set.k() == 2);
  CHECK(set.roots().size() == 3);
  CHECK(set.contains_root(4));
  CHECK(set.contains_value(81));
}

TEST_CASE("reader rejects malformed files") {
  CHECK_THROWS_AS(parse(""), FormatError);
  CHECK_THROWS_AS(parse("1\n2\n"), FormatError);
  CHECK_THROWS_AS(parse("k=0\n"), FormatError);
  CHECK_THROWS_AS(parse("k=x\n"), FormatError);
  CHECK_THROWS_AS(parse("k=2\n3\n2\n"), FormatError);
  CHECK_THROWS_AS(parse("k=2\n3\n3\n"), FormatError);
  CHECK_THROWS_AS(parse("k=2\n0\n"), FormatError);
  CHECK_THROWS_AS(parse("k=2\n-4\n"), FormatError);
  CHECK_THROWS_AS(parse("k=2\n1.5\n"), FormatError);
  CHECK_THROWS_AS(parse("k=3\n10000000\n"), FormatError);
  CHECK_THROWS_AS(load_power_set("/nonexistent/set.txt"), FormatError);
}

TEST_CASE("set collections") {
  std::istringstream in("1 2\n# comment\n3 1 1  # trailing\n\n5\n");
  auto sets = read_set_collection(in);
  REQUIRE(sets.size() == 3);
  CHECK(sets[0] == RootSet{1, 2});
  CHECK(sets[1] == RootSet{1, 3});
  CHECK(sets[2] == RootSet{5});
  std::istringstream bad("1 x\n");
  CHECK_THROWS_AS(read_set_collection(bad), FormatError);
}

TEST_CASE("files on disk") {
  auto dir = std::filesystem::temp_directory_path() / "sidonpow_set_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "set.txt";
  {
    std::ofstream out(path);
    write_power_set(out, PowerSet::full(2, 400));
  }
  CHECK(load_power_set(path) == PowerSet::full(2, 400));
  {
    std::ofstream out(dir / "family.txt");
    out << "1 2\n2 3\n";
  }
  CHECK(load_set_collection(dir / "family.txt").size() == 2);
  std::filesystem::remove_all(dir);
}
