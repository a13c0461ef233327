#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfdts/diagram.hpp"

namespace hfdts {

/// Page of an abstract open book: genus with one boundary component, or the
/// annulus (genus 0, two boundary components).
struct PageSpec {
  int genus = 1;
  int boundary = 1;

  int cut_arcs() const { return boundary == 2 ? 1 : 2 * genus; }
  /// UnsupportedPage unless one of the two supported shapes.
  void check() const;
  /// Genus of the doubled surface.
  int surface_genus() const { return cut_arcs(); }
};

struct MonodromyLetter {
  std::string curve;
  int sign = 1;
};
using MonodromyWord = std::vector<MonodromyLetter>;

struct OpenBookSpec {
  PageSpec page;
  MonodromyWord monodromy;
  std::optional<std::string> delta;
  int framing = 0;
};

/// Built-in twist curves of a page: "c" (the core) for the annulus; for a
/// one-boundary page the curves dual to the cut arcs, "a", "b" in genus 1 and
/// "a1", "b1", "a2", ... followed by the chain curves "c1", ... otherwise.
std::vector<std::string> page_curve_names(const PageSpec& page);

/// Doubled-page diagram with identity monodromy. Alpha curves are the doubled
/// cut arcs, beta curves the doubled pushoffs; the page curves are carried as
/// aux curves in the inverted half. z sits in the region of the page half
/// containing the middle of the page.
HeegaardDiagram build_identity_diagram(const PageSpec& page);

/// Applies each letter in order as a Dehn twist of all beta curves along the
/// named page curve, then cancels the bigons this created. A positive letter
/// is a right-handed twist of the page; the inverted half sees it as a left turn.
HeegaardDiagram apply_monodromy(const HeegaardDiagram& d, const MonodromyWord& word);

/// Cancels bigons between every beta curve and every alpha or aux curve.
HeegaardDiagram tidy_beta(const HeegaardDiagram& d);

/// Order of H_1 of the closed manifold, from the action of the monodromy on
/// the homology of the page; 0 means infinite.
long long homology_order(const PageSpec& page, const MonodromyWord& word);

/// The single crossing of delta with a beta curve. `east` is the outgoing
/// forward dart of that beta curve there; sigma(east) runs along delta.
struct AdaptedCrossing {
  int vertex = -1;
  int beta = -1;  // curve index
  int east = -1;
};

/// DeltaNotAdapted unless delta is an aux curve meeting exactly one beta curve, once.
AdaptedCrossing adapted_crossing(const HeegaardDiagram& d, int delta);

/// Places z and w in the two opposite sectors at the crossing of delta with
/// beta_1 that the positive twist joins into one channel (z north-east, w
/// south-west when beta_1 runs east and delta north), swapped when only the
/// swapped order leaves the knot diagrams admissible. Idempotent once w exists.
/// NoAdaptedConfiguration when delta is missing or not adapted.
HeegaardDiagram place_knot_basepoints(const HeegaardDiagram& d, int delta);

/// The three diagrams of the twist sequence on one complex: beta_1' is built
/// from parallel copies of beta_1 and delta joined at their crossing, so every
/// vertex of beta_1' sits next to a vertex of beta_1 or of delta.
struct DtsTriple {
  HeegaardDiagram ab;   // (alpha, beta; z, w)
  HeegaardDiagram abp;  // (alpha, beta'; z), marks Dstar, Dstarstar, Dz, Dw
  HeegaardDiagram ad;   // (alpha, {delta, beta_2, ...}; z, w)
  int beta1 = -1, delta = -1, beta1p = -1;
  std::map<int, int> from_beta;   // vertex on beta_1' -> vertex on beta_1
  std::map<int, int> from_delta;  // vertex on beta_1' -> vertex on delta
};

DtsTriple build_dts_triple(const HeegaardDiagram& d, int delta);

struct FramingRecord {
  int surgery_framing = 0;   // framing n of L relative to the user's convention
  int page_framing = 0;      // framing of L' relative to the page framing
  int pushoff_framing = 0;   // K' is the pushoff of L' with this framing
};

FramingRecord framing_translate(int n);
int framing_inverse(const FramingRecord& r);

}  // namespace hfdts
