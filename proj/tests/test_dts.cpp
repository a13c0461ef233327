#include "doctest.h"
#include "hfdts/dts.hpp"
#include "hfdts/error.hpp"

using namespace hfdts;

namespace {

DtsReport run(const PageSpec& page, const MonodromyWord& w, const std::string& delta) {
  DtsInput in;
  in.open_book.page = page;
  in.open_book.monodromy = w;
  in.open_book.delta = delta;
  return run_dts(in);
}

int hat_rank(const PageSpec& page, const MonodromyWord& w) {
  auto d = apply_monodromy(build_identity_diagram(page), w);
  if (!is_nice(d).nice) d = nicify(d, {}).diagram;
  const auto r = differential(d);
  return static_cast<int>(r.generators.size()) - 2 * rank(r.matrix);
}

GeneratorSplit two_by_two() {
  GeneratorSplit s;
  s.side = {0, 0, 1, 1};
  s.index = {0, 1, 0, 1};
  s.num_ab = 2;
  s.num_ad = 2;
  return s;
}

}  // namespace

TEST_CASE("blocks of a split differential") {
  // ab generators 0,1 and ad generators 2,3; f hits 0 from 2
  const auto d = F2Matrix::from_entries(4, 4, {{0, 1}, {0, 2}, {2, 3}});
  const auto b = extract_blocks(d, two_by_two());
  CHECK(b.d_ab == F2Matrix::from_entries(2, 2, {{0, 1}}));
  CHECK(b.d_ad == F2Matrix::from_entries(2, 2, {{0, 1}}));
  CHECK(b.f == F2Matrix::from_entries(2, 2, {{0, 0}}));
  CHECK(b.lower_left.is_zero());

  const auto bad = F2Matrix::from_entries(4, 4, {{3, 0}});
  try {
    extract_blocks(bad, two_by_two());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SplittingViolated);
  }
}

TEST_CASE("kernel and image ranks must agree with the connecting map") {
  InducedMap f{F2Matrix::identity(3), 0, 3};
  const auto r = kernel_image_ranks(f, f);
  CHECK(r.kernel == 0);
  CHECK(r.image == 3);
  InducedMap zero{F2Matrix(3, 3), 3, 0};
  CHECK_THROWS_AS(kernel_image_ranks(f, zero), Error);
}

TEST_CASE("annulus core sequence is exact") {
  const auto r = run({0, 2}, {}, "c");
  CHECK(r.exact());
  CHECK(r.parity);
  CHECK(r.bounds);
  CHECK(r.lower_left_zero);
  CHECK(r.d_ab_matches);
  CHECK(r.d_ad_matches);
  CHECK(r.generators[1] == r.generators[0] + r.generators[2]);
  CHECK(r.cone_rank == r.hf_y_minus);
}

TEST_CASE("surgery term equals the hat rank of the twisted open book") {
  struct Case {
    PageSpec page;
    MonodromyWord w;
    std::string delta;
  };
  const std::vector<Case> cases = {
      {{0, 2}, {}, "c"},
      {{0, 2}, {{"c", 1}, {"c", 1}}, "c"},
      {{0, 2}, {{"c", -1}, {"c", -1}, {"c", -1}}, "c"},
      {{1, 1}, {{"a", 1}}, "a"},
      {{1, 1}, {{"a", 1}, {"b", 1}}, "a"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.delta);
    CAPTURE(c.w.size());
    const auto r = run(c.page, c.w, c.delta);
    CHECK(r.exact());
    MonodromyWord twisted = c.w;
    twisted.push_back({c.delta, 1});
    CHECK(r.hf_y_minus == hat_rank(c.page, twisted));
    CHECK(r.f_star.kernel + r.f_star.image == r.hfk_y0);
  }
}

TEST_CASE("reports are deterministic") {
  const auto a = report_to_json(run({0, 2}, {{"c", 1}, {"c", 1}}, "c")).dump();
  const auto b = report_to_json(run({0, 2}, {{"c", 1}, {"c", 1}}, "c")).dump();
  CHECK(a == b);
  const auto text = report_to_text(run({0, 2}, {}, "c"));
  CHECK(text.find("via f_*") != std::string::npos);
}

TEST_CASE("errors name their stage") {
  DtsInput in;
  in.open_book.page = {1, 1};
  CHECK_THROWS_AS(run_dts(in), Error);
  try {
    run_dts(in);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoAdaptedConfiguration);
    CHECK(std::string(e.what()).find("basepoints") != std::string::npos);
  }
  in.open_book.delta = "q";
  try {
    run_dts(in);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TwistCurveOutsidePage);
  }
}
