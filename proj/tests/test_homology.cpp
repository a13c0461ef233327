#include <random>

#include "doctest.h"
#include "hfdts/error.hpp"
#include "hfdts/homology.hpp"

using namespace hfdts;

namespace {

std::vector<std::string> names(int n, const char* prefix) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

ChainComplexF2 zero_complex(int n) { return ChainComplexF2(names(n, "g"), F2Matrix(n, n)); }

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(F2Matrix(4, 5)) == 0);
  CHECK(rank(F2Matrix::identity(7)) == 7);
  F2Matrix ones(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) ones.set(r, c, true);
  CHECK(rank(ones) == 1);
  CHECK(rank(F2Matrix::identity(130)) == 130);
}

TEST_CASE("from_entries rejects duplicates and out-of-range positions") {
  CHECK_THROWS_AS(F2Matrix::from_entries(2, 2, {{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(F2Matrix::from_entries(2, 2, {{2, 0}}), Error);
  const auto m = F2Matrix::from_entries(2, 3, {{0, 2}, {1, 0}});
  CHECK(m.entries().size() == 2);
  CHECK(m.get(0, 2));
}

TEST_CASE("solve and kernel agree") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    F2Matrix m(9, 13);
    for (int r = 0; r < 9; ++r)
      for (int c = 0; c < 13; ++c) m.set(r, c, rng() & 1);
    const auto ker = kernel_basis(m);
    CHECK(static_cast<int>(ker.size()) == 13 - rank(m));
    for (const auto& v : ker) {
      const auto mv = m.apply(v);
      for (bool b : mv) CHECK_FALSE(b);
    }
    std::vector<bool> x(13);
    for (auto&& b : x) b = rng() & 1;
    const auto b = m.apply(x);
    const auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m.apply(*sol) == b);
  }
}

TEST_CASE("homology ranks") {
  CHECK(homology_rank(zero_complex(5)) == 5);
  const ChainComplexF2 pair(names(2, "x"), F2Matrix::from_entries(2, 2, {{1, 0}}));
  CHECK(homology_rank(pair) == 0);
  CHECK_THROWS_AS(ChainComplexF2(names(2, "x"), F2Matrix::identity(2)), Error);
}

TEST_CASE("induced maps") {
  const auto c = zero_complex(3);
  const auto id = induced_map(ChainMapF2(c, c, F2Matrix::identity(3)));
  CHECK(id.kernel_rank == 0);
  CHECK(id.image_rank == 3);
  const auto zero = induced_map(ChainMapF2(c, c, F2Matrix(3, 3)));
  CHECK(zero.kernel_rank == 3);
  CHECK(zero.image_rank == 0);
  CHECK_THROWS_AS(ChainMapF2(ChainComplexF2(names(2, "x"), F2Matrix::from_entries(2, 2, {{1, 0}})), zero_complex(2),
                             F2Matrix::identity(2)),
                  Error);
}

TEST_CASE("mapping cones") {
  const auto a = zero_complex(2);
  const auto b = zero_complex(3);
  CHECK(homology_rank(mapping_cone(ChainMapF2(a, b, F2Matrix(3, 2)))) == 5);
  CHECK(homology_rank(mapping_cone(ChainMapF2(b, b, F2Matrix::identity(3)))) == 0);
}

TEST_CASE("connecting morphism of a hand-built sequence") {
  // A = <a>, M = <a, m> with d m = a, C = <c>.
  const ChainComplexF2 A({"a"}, F2Matrix(1, 1));
  const ChainComplexF2 M({"a", "m"}, F2Matrix::from_entries(2, 2, {{0, 1}}));
  const ChainComplexF2 C({"c"}, F2Matrix(1, 1));
  const ChainMapF2 i(A, M, F2Matrix::from_entries(2, 1, {{0, 0}}));
  const ChainMapF2 p(M, C, F2Matrix::from_entries(1, 2, {{0, 1}}));
  const auto delta = connecting_morphism(i, p);
  CHECK(delta.image_rank == 1);
  CHECK(delta.kernel_rank == 0);

  const ChainComplexF2 split({"a", "m"}, F2Matrix(2, 2));
  const ChainMapF2 i2(A, split, F2Matrix::from_entries(2, 1, {{0, 0}}));
  const ChainMapF2 p2(split, C, F2Matrix::from_entries(1, 2, {{0, 1}}));
  CHECK(connecting_morphism(i2, p2).image_rank == 0);

  const ChainMapF2 not_injective(A, M, F2Matrix(2, 1));
  CHECK_THROWS_AS(connecting_morphism(not_injective, p), Error);
}

TEST_CASE("exactness verdicts") {
  TriangleRanks zero;
  CHECK(exactness_check(zero).all());
  TriangleRanks t;
  t.homology[0] = 1;
  t.homology[1] = 1;
  t.map_image[0] = 1;  // iso node 0 -> node 1
  t.map_kernel[1] = 1;
  CHECK(exactness_check(t).all());
  t.map_image[0] = 0;
  t.map_kernel[0] = 1;
  CHECK_FALSE(exactness_check(t).all());
}
