#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfdts/differential.hpp"
#include "hfdts/homology.hpp"
#include "hfdts/io.hpp"
#include "hfdts/nicify.hpp"
#include "hfdts/open_book.hpp"

namespace hfdts {

/// Where each generator of D_ab' comes from: side 0 is an alpha-beta
/// generator, side 1 an alpha-delta one; index is its position in the
/// generator list of D_ab or D_ad.
struct GeneratorSplit {
  std::vector<int> side;
  std::vector<int> index;
  int num_ab = 0;
  int num_ad = 0;
};

/// MissingMarks when the triple lacks its marks or a vertex of beta_1' has
/// no recorded origin.
GeneratorSplit split_generators(const DtsTriple& t, const std::vector<Generator>& abp, const std::vector<Generator>& ab,
                                const std::vector<Generator>& ad);

/// Blocks of the D_ab' differential, rows and columns reordered to the D_ab
/// and D_ad generator lists.
struct DtsBlocks {
  F2Matrix d_ab;        // ab -> ab
  F2Matrix d_ad;        // ad -> ad
  F2Matrix f;           // ad -> ab
  F2Matrix lower_left;  // ab -> ad, zero
};

/// SplittingViolated when the lower-left block is not zero.
DtsBlocks extract_blocks(const F2Matrix& abp_differential, const GeneratorSplit& split);

struct RankPair {
  int kernel = 0;
  int image = 0;
};

/// Ranks of f_*, checked against the connecting morphism of the cone;
/// ConsistencyFailure when they differ.
RankPair kernel_image_ranks(const InducedMap& f_star, const InducedMap& connecting);

/// The knot diagram with beta_1, the same with delta in its place, and both
/// together (nice exactly when the twisted diagram will be), all with z and w.
/// `d` carries z and w already.
std::vector<NicifyView> dts_views(const HeegaardDiagram& d, int delta);

/// Nicifies the knot diagram together with its delta views, then builds the
/// twist triple on the result.
struct PreparedTriple {
  DtsTriple triple;
  NicifyResult nicify;
};
PreparedTriple prepare_triple(const HeegaardDiagram& d, int delta, const NicifyOptions& opts);

struct DtsInput {
  OpenBookSpec open_book;
  int max_nicify_steps = 10000;
  std::uint64_t seed = 0;
  bool parallel = true;
};

struct DtsReport {
  OpenBookSpec open_book;
  FramingRecord framing;
  std::string beta1, delta;

  int nicify_steps = 0;
  int nicify_explored = 0;
  int initial_badness = 0;
  std::vector<FingerStep> nicify_audit;

  int generators[3] = {0, 0, 0};  // D_ab, D_ab', D_ad
  bool nice[3] = {false, false, false};
  bool admissible[3] = {false, false, false};

  int hfk_y = 0;      // HFK(Y, K)
  int hf_y_minus = 0;  // HF(Y_{-1}(K))
  int hfk_y0 = 0;     // HFK(Y_0(K), mu)
  int cone_rank = 0;

  bool lower_left_zero = false;
  bool d_ab_matches = false;
  bool d_ad_matches = false;
  bool diagonal_nw_zero = false;
  bool f_disks_marked = false;
  int f_disks = 0;

  RankPair gamma1, gamma2, f_star, connecting;
  ExactnessVerdict exactness;
  bool parity = false;
  bool bounds = false;

  bool exact() const { return exactness.all(); }
};

/// The positive twist sequence for the knot delta of the open book. Errors
/// carry the stage that raised them.
DtsReport run_dts(const DtsInput& in);

Json report_to_json(const DtsReport& r);
std::string report_to_text(const DtsReport& r);

}  // namespace hfdts
