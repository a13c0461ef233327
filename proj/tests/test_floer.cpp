#include "doctest.h"
#include "hfdts/differential.hpp"
#include "hfdts/error.hpp"
#include "hfdts/io.hpp"
#include "hfdts/surgery.hpp"
#include "torus_fixture.hpp"

using namespace hfdts;

namespace {

int hat_rank(const DifferentialResult& r) {
  return static_cast<int>(r.generators.size()) - 2 * rank(r.matrix);
}

// S^3 diagram with one finger of b1 pushed across a1: three generators, a rank one differential.
HeegaardDiagram fingered_sphere() {
  const auto d = fixture::lens_diagram(1, 0);
  const auto& c = d.complex;
  const int a = c.find_curve("a1"), b = c.find_curve("b1");
  int e = -1, f = -1;
  for (int x : c.face_darts(0))
    for (int y : c.face_darts(0))
      if (e < 0 && c.curve(x) == b && c.curve(y) == a) {
        e = x;
        f = y;
      }
  FingerOptions opts;
  opts.forbid_basepoint_crossing = false;
  return finger_move(d, e, {f}, opts);
}

}  // namespace

TEST_CASE("lens space diagrams") {
  for (int p = 1; p <= 7; ++p) {
    const auto d = fixture::lens_diagram(p, 1);
    const auto r = differential(d);
    CHECK(r.generators.size() == static_cast<size_t>(p));
    CHECK(rank(r.matrix) == 0);
    CHECK(hat_rank(r) == p);
  }
  const auto d = fixture::lens_diagram(5, 2);
  CHECK(hat_rank(differential(d)) == 5);
}

TEST_CASE("fingered sphere has a rank one differential") {
  const auto d = fingered_sphere();
  REQUIRE(check_diagram(d).empty());
  CHECK(is_nice(d).nice);
  DifferentialOptions opts;
  opts.record_disks = true;
  const auto r = differential(d, opts);
  CHECK(r.generators.size() == 3);
  CHECK(rank(r.matrix) == 1);
  CHECK(hat_rank(r) == 1);
  // both bigons leave the same new point
  REQUIRE(r.disks.size() == 2);
  CHECK(r.disks[0].x == r.disks[1].x);
  const DiagramView view(d);
  for (const auto& disk : r.disks) {
    const Rational mu = maslov_index(view, Domain{disk.coeffs}, r.generators[disk.x], r.generators[disk.y]);
    CHECK(mu == Rational(1));
    int support = 0;
    for (auto v : disk.coeffs) support += v != 0;
    CHECK(support == 1);
  }
}

TEST_CASE("serial and parallel differentials agree") {
  const auto d = fingered_sphere();
  const DiagramView view(d);
  const DomainSystem sys(view, std::vector<int>{view.class_of_point("z")});
  const auto gens = enumerate_generators(view);
  std::vector<CountedDisk> ds, dp;
  const auto s = differential_serial(view, sys, gens, &ds);
  const auto p = differential_parallel(view, sys, gens, &dp);
  CHECK(s == p);
  CHECK(ds.size() == dp.size());
}

TEST_CASE("maslov index of a whole-surface domain is twice the multiplicity") {
  const auto d = fixture::lens_diagram(3, 1);
  const DiagramView view(d);
  const auto gens = enumerate_generators(view);
  IntVector all(view.num_classes(), 1);
  // the surface itself: e = chi(T^2) = 0, each point has n = 1, so mu = 2
  for (const auto& g : gens) CHECK(maslov_index(view, Domain{all}, g, g) == Rational(2));
  const auto fam = connecting_domains(view, gens[0], gens[1]);
  CHECK_FALSE(fam.exists);
}

TEST_CASE("admissibility") {
  CHECK(check_admissibility(fixture::lens_diagram(4, 1)).admissible);
  CHECK(check_admissibility(fixture::lens_diagram(4, 1)).lattice_rank == 0);
  const auto par = fixture::torus_diagram({{"a1", Family::Alpha, 1, 0, 0.0, 0.1},
                                           {"b1", Family::Beta, 1, 0, 0.0, 0.6},
                                           {"c", Family::Aux, 0, 1, 0.3, 0.0}});
  const auto v = check_admissibility(par);
  CHECK_FALSE(v.admissible);
  CHECK(v.lattice_rank == 1);
  bool pos = false, neg = false;
  for (auto x : v.witness) {
    pos |= x > 0;
    neg |= x < 0;
  }
  CHECK(pos != neg);
  DifferentialOptions opts;
  opts.check_nice = false;
  CHECK_THROWS_AS(differential(par, opts), Error);
}

TEST_CASE("diagram json round trip") {
  const auto d = fingered_sphere();
  const auto j = diagram_to_json(d);
  const auto back = diagram_from_json(j);
  CHECK(diagram_to_json(back) == j);
  CHECK(hat_rank(differential(back)) == 1);
}

TEST_CASE("missing marks are reported") {
  auto d = fixture::lens_diagram(2, 1);
  d.points.clear();
  CHECK_THROWS_AS(differential(d), Error);
}
