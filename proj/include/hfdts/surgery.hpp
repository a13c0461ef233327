#pragma once

#include <string>
#include <vector>

#include "hfdts/diagram.hpp"
#include "hfdts/map_builder.hpp"

namespace hfdts {

/// A builder over a diagram's complex with its named regions anchored, so
/// that surgeries carry basepoints and marks along.
class Surgery {
 public:
  explicit Surgery(const HeegaardDiagram& d);

  MapBuilder& builder() { return b_; }
  const MapBuilder& builder() const { return b_; }
  const HeegaardDiagram& source() const { return *d_; }
  bool is_point_face_dart(int dart) const;  // left face of dart holds a named region
  bool is_basepoint_face_dart(int dart) const;

  /// Finalizes; alpha/beta indices and named regions are carried over.
  HeegaardDiagram finish(MapBuilder::Result* result = nullptr) const;

 private:
  const HeegaardDiagram* d_;
  MapBuilder b_;
  std::vector<std::string> names_;
  std::vector<int> handles_;
};

struct Pushoff {
  int curve = -1;
  std::vector<int> darts;      // new forward darts, parallel to the traversed path
  std::vector<int> vertices;   // new vertex next to each path vertex
  std::vector<int> path;       // the traversed darts of the original curve
};

/// Parallel copy of the closed path `path` (consecutive darts of one curve)
/// on its left. Anchors on path darts move to the copy.
Pushoff pushoff_left(MapBuilder& b, const std::vector<int>& path, const std::string& name, Family family,
                     bool scratch);

/// Path of a curve in the builder, either along or against its orientation.
std::vector<int> curve_path(const MapBuilder& b, int curve, bool along);

/// Twist every target curve along curve c. Positive sign turns right.
HeegaardDiagram dehn_twist(const HeegaardDiagram& d, int c, int sign, const std::vector<int>& targets);

/// Bigon faces between curves a and b that can be cancelled.
std::vector<int> bigon_faces(const HeegaardDiagram& d, int a, int b);
/// Cancel one bigon face.
HeegaardDiagram cancel_bigon(const HeegaardDiagram& d, int face);

/// Cancel empty bigons between curves a and b until none remain. Unless
/// strict is false, a leftover bigon holding a named region is an error.
HeegaardDiagram reduce_bigons(const HeegaardDiagram& d, int a, int b, bool strict = true);

/// Push the arc of dart `e` across the face on its left and over the arc of
/// dart `f` (a dart of the same face); subsequent entries of `path` continue
/// the finger from its tip. Darts refer to the input complex.
struct FingerOptions {
  bool forbid_basepoint_crossing = true;
};
HeegaardDiagram finger_move(const HeegaardDiagram& d, int e, const std::vector<int>& path,
                            const FingerOptions& opts = {});

/// The tip dart of the last finger built by finger_move_builder.
int finger_move_builder(Surgery& s, int e, const std::vector<int>& path, const FingerOptions& opts);

/// Delete a transparent curve.
HeegaardDiagram remove_curve(const HeegaardDiagram& d, int c);

}  // namespace hfdts
