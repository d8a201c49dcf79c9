#include <filesystem>
#include <random>

#include "andgraph/constructors.hpp"
#include "andgraph/errors.hpp"
#include "andgraph/generators.hpp"
#include "andgraph/io.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace andgraph;

namespace {

int error_line(auto&& parse) {
  try {
    parse();
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return -1;
}

}  // namespace

TEST_CASE("graph files") {
  CHECK(parse_graph("p and 1 0\n") == Graph(1));
  CHECK(parse_graph("c paw\np and 4 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n") ==
        testing::paw_graph());
  CHECK(parse_graph("p and 2 1\r\ne 2 1") == complete_graph(2));

  CHECK(error_line([] { parse_graph("p and 3 1\ne 1 1\n"); }) == 2);
  CHECK(error_line([] { parse_graph("p and 3 2\ne 1 2\n\ne 2 1\n"); }) == 4);
  CHECK(error_line([] { parse_graph("p and 3 1\ne 1 4\n"); }) == 2);
  CHECK(error_line([] { parse_graph("p and 3 1\ne 1 x\n"); }) == 2);
  CHECK(error_line([] { parse_graph("p and 3 2\ne 1 2\n"); }) == 1);
  CHECK(error_line([] { parse_graph("e 1 2\n"); }) == 1);
  CHECK(error_line([] { parse_graph("p and 3 1\nq 1 2\n"); }) == 2);
  CHECK(error_line([] { parse_graph("p and 3 1\ne 1 2 3\n"); }) == 2);
}

TEST_CASE("aux model files round trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 3 + static_cast<int>(seed % 20);
    auto iv = std::get<IntervalModel>(generate({Family::RandomInterval, {n}}, seed).aux);
    CHECK(parse_interval_model(format_interval_model(iv)) == iv);
    auto op = std::get<OuterplanarModel>(generate({Family::RandomOuterplanar, {n}}, seed).aux);
    CHECK(parse_outerplanar_model(format_outerplanar_model(op)) == op);
    auto rp = std::get<RootedPathModel>(generate({Family::RandomRootedPath, {n}}, seed).aux);
    CHECK(parse_rooted_path_model(format_rooted_path_model(rp)) == rp);
  }
  CHECK(parse_interval_model("i 2 1/2 3\ni 1 0 1\n").intervals[0] == Interval{0, 1});
  CHECK(error_line([] { parse_interval_model("i 1 0 1\ni 1 2 3\n"); }) == 2);
  CHECK(error_line([] { parse_interval_model("i 1 0 1\ni 2 3 2\n"); }) == 2);
  CHECK(error_line([] { parse_interval_model("i 1 0 1/0\n"); }) == 1);
  CHECK(error_line([] { parse_outerplanar_model("chord 1 3\n"); }) == 1);
  CHECK(error_line([] { parse_rooted_path_model("t 1 2\nk 3 1\n"); }) == 2);
}

TEST_CASE("realization files") {
  Realization f = testing::paw_realization();
  const std::string text = format_realization(f);
  CHECK(text.rfind("r and 4 1\nv 1 1 1 9/2 2\n", 0) == 0);
  CHECK(parse_realization(text) == f);

  Realization c = cycle_cand1(6, frac(1, 3));
  const std::string ct = format_realization(c);
  CHECK(ct.find("central\n") != std::string::npos);
  CHECK(parse_realization(ct) == c);

  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    Realization r = testing::random_realization(1 + trial % 12, 1 + trial % 3, rng);
    CHECK(parse_realization(format_realization(r)) == r);
  }

  CHECK(error_line([] { parse_realization("r and 1 1\ncentral\nv 1 1 0 4 1\n"); }) == 2);
  CHECK(error_line([] { parse_realization("r and 1 1\nv 1 1 0 4 5\n"); }) == 2);
  CHECK(error_line([] { parse_realization("r and 2 1\nv 1 1 0 4 1\n"); }) == 1);
  CHECK(error_line([] { parse_realization("r and 1 2\nv 1 1 0 4 1\nv 1 1 0 4 1\n"); }) == 3);
  CHECK(error_line([] { parse_realization("r and 1 1\nv 1 2 0 4 1\n"); }) == 2);
}

TEST_CASE("ordering and implicit code files") {
  Ordering o({3, 1, 2});
  CHECK(format_ordering(o) == "o 3 1 2\n");
  CHECK(parse_ordering(format_ordering(o)) == o);
  CHECK(error_line([] { parse_ordering("o 1 1 2\n"); }) == 1);
  CHECK(error_line([] { parse_ordering("o 1 4 2\n"); }) == 1);
  CHECK(error_line([] { parse_ordering("o 1 2\no 2 1\n"); }) == 2);

  auto codes = implicit_encode(cycle_graph(5), Ordering::identity(5));
  auto back = parse_implicit_codes(format_implicit_codes(codes));
  REQUIRE(back.size() == codes.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    CHECK(back[i].left == codes[i].left);
    CHECK(back[i].right == codes[i].right);
    CHECK(back[i].position == codes[i].position);
  }
  CHECK(error_line([] { parse_implicit_codes("ic 1 2 3 1\n"); }) == 1);
}

TEST_CASE("corner box files") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    CornerBoxModel m = to_corner_boxes(testing::random_realization(1 + trial % 9, 1 + trial % 2, rng));
    CHECK(parse_corner_boxes(format_corner_boxes(m)) == m);
  }
  CHECK(error_line([] { parse_corner_boxes("b 1 1 2 3 -2 -1\nb 1 1 2 3 -2 -1\n"); }) == 2);
  CHECK(error_line([] { parse_corner_boxes("b 1 1 3 2 -2 -1\n"); }) == 1);
}

TEST_CASE("semi-square files") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    SemiSquareModel m = to_semisquares(testing::random_central_realization(1 + trial % 9, rng));
    SemiSquareModel back = parse_semisquares(format_semisquares(m));
    CHECK(back.shift == m.shift);
    CHECK(back.triangles == m.triangles);
  }
  CHECK(error_line([] { parse_semisquares("s 0\ntri 1 1 -1 2 0 1 0\n"); }) == 2);
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "andgraph_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "g.graph").string();
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  CHECK(read_file(path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK_THROWS(read_file((dir / "missing").string()));
  CHECK_THROWS(write_file_atomic((dir / "no" / "such" / "dir").string(), "x"));
  std::filesystem::remove_all(dir);
}
