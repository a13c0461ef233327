#include "doctest.h"
#include "hfdts/error.hpp"
#include "hfdts/grid.hpp"
#include "hfdts/homology.hpp"

using namespace hfdts;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    grid_parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("grid text and JSON forms") {
  const auto g = grid_parse("n:2 X:[1,0] O:[0,1]");
  CHECK(g.n == 2);
  CHECK(g.X == std::vector<int>{1, 0});
  CHECK(g.O == std::vector<int>{0, 1});
  const auto j = grid_parse(R"({"n":2,"X":[1,0],"O":[0,1]})");
  CHECK(j.X == g.X);
  CHECK(grid_from_json(grid_to_json(g)).O == g.O);
  CHECK(grid_parse("O:[0,1]\n X:[1,0]\n n:2").X == g.X);
}

TEST_CASE("malformed grids") {
  CHECK(code_of("n:2 X:[0,0] O:[1,1]") == ErrorCode::InvalidGrid);
  CHECK(code_of("n:2 X:[0,1] O:[0,1]") == ErrorCode::InvalidGrid);
  CHECK(code_of("n:3 X:[1,0] O:[0,1]") == ErrorCode::InvalidGrid);
  CHECK(code_of("n:two X:[1,0] O:[0,1]") == ErrorCode::InvalidInput);
  CHECK(code_of("n:2 X:1,0 O:[0,1]") == ErrorCode::InvalidInput);
  CHECK(code_of("n:2 X:[1,0]") == ErrorCode::InvalidInput);
  CHECK(code_of("n:2 n:2 X:[1,0] O:[0,1]") == ErrorCode::InvalidInput);
  CHECK(code_of("{\"n\":2,") == ErrorCode::InvalidInput);
  try {
    grid_parse("n:2 X:[1,0 O:[0,1]");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
  }
  const GridDiagram big{8, {1, 2, 3, 4, 5, 6, 7, 0}, {0, 1, 2, 3, 4, 5, 6, 7}};
  CHECK_THROWS_AS(grid_tilde_rank(big), Error);
}

TEST_CASE("permutation index is the lexicographic rank") {
  CHECK(permutation_index({0, 1, 2}) == 0);
  CHECK(permutation_index({0, 2, 1}) == 1);
  CHECK(permutation_index({2, 1, 0}) == 5);
  CHECK(permutation_index({3, 2, 1, 0}) == 23);
}

TEST_CASE("knot grid ranks") {
  struct Case {
    const char* text;
    int rank;
  };
  for (const auto& c : {Case{"n:2 X:[1,0] O:[0,1]", 2}, Case{"n:3 X:[1,2,0] O:[0,1,2]", 4},
                        Case{"n:5 X:[2,3,4,0,1] O:[0,1,2,3,4]", 48},
                        Case{"n:6 X:[3,2,4,5,1,0] O:[1,5,0,3,4,2]", 160}}) {
    CAPTURE(c.text);
    const auto g = grid_parse(c.text);
    CHECK(g.components() == 1);
    const auto r = grid_tilde_rank(g);
    CHECK(r.rank == c.rank);
    CHECK(r.rank % (1 << (g.n - 1)) == 0);
    const auto d = grid_differential(g);
    CHECK((d * d).is_zero());
  }
}

TEST_CASE("rotation and serial kernels agree") {
  const auto g = grid_parse("n:6 X:[3,2,4,5,1,0] O:[1,5,0,3,4,2]");
  for (int k = 1; k < g.n; ++k) CHECK(grid_tilde_rank(g.rotated(k)).rank == 160);
  CHECK(grid_differential(g) == grid_differential_serial(g));
  CHECK(grid_tilde_rank(g, false).rank == grid_tilde_rank(g, true).rank);
}

TEST_CASE("link components") {
  const GridDiagram hopf{4, {2, 3, 0, 1}, {0, 1, 2, 3}};
  CHECK(hopf.components() == 2);
}
