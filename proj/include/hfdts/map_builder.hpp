#pragma once

#include <array>
#include <string>
#include <vector>

#include "hfdts/cell_complex.hpp"

namespace hfdts {

/// Mutable dart map used to perform surgeries. Darts are independent records,
/// so vertices of valence 2 may exist while an operation is in progress;
/// finalize() suppresses them.
class MapBuilder {
 public:
  struct Dart {
    int origin = -1;
    int twin = -1;
    int sigma = -1;
    int sigma_inv = -1;
    int curve = -1;
    bool forward = true;
    bool alive = true;
  };
  struct Curve {
    std::string name;
    Family family = Family::Aux;
    bool scratch = false;  // absorbed into a labeled curve at finalize
  };
  struct Result {
    CellComplex complex;
    std::vector<int> dart_remap;    // builder dart -> final dart or -1
    std::vector<int> vertex_remap;  // builder vertex -> final vertex or -1
    std::vector<int> curve_remap;   // builder curve -> final curve or -1
    std::vector<int> anchors;       // final dart of each anchor handle
  };

  explicit MapBuilder(const CellComplex& c);

  int num_darts() const { return static_cast<int>(darts_.size()); }
  int num_vertices() const { return num_vertices_; }
  const Dart& dart(int d) const { return darts_[d]; }
  int twin(int d) const { return darts_[d].twin; }
  int sigma(int d) const { return darts_[d].sigma; }
  int sigma_inv(int d) const { return darts_[d].sigma_inv; }
  int origin(int d) const { return darts_[d].origin; }
  int target(int d) const { return darts_[darts_[d].twin].origin; }
  int curve(int d) const { return darts_[d].curve; }
  int next(int d) const { return sigma_inv(twin(d)); }
  bool alive(int d) const { return darts_[d].alive; }
  const Curve& curve_info(int c) const { return curves_[c]; }
  int num_curves() const { return static_cast<int>(curves_.size()); }
  int find_curve(const std::string& name) const;

  /// Forward darts of a curve in traversal order (all vertices must be 4-valent).
  std::vector<int> curve_darts(int c) const;
  /// Darts around the face on the left of d.
  std::vector<int> face_of(int d) const;

  int add_curve(const std::string& name, Family family, bool scratch = false);
  void set_curve(int d, int c);
  void set_forward(int d, bool fwd) { darts_[d].forward = fwd; }
  /// Re-label every dart of curve `from` as curve `to`.
  void relabel(int from, int to);

  int new_vertex() { return num_vertices_++; }
  /// New twin pair; returns the first dart, the second is its twin.
  int new_edge(int origin_a, int origin_b, int curve, bool forward_a);
  /// Sets the counter-clockwise rotation at a vertex to exactly these darts.
  void set_rotation(const std::vector<int>& ccw);

  /// Subdivide the arc of d with a new vertex next to origin(d). The dart d
  /// keeps the far portion (it now starts at the new vertex); the returned
  /// dart is the new near portion starting at the old origin.
  int split_near_origin(int d);

  /// Separate a 4-valent vertex into two valence-2 vertices, joining
  /// {a, sigma(a)} and {sigma^2(a), sigma^3(a)}.
  void smooth(int a);

  /// Make x and y twins (both must be alive with dead former twins).
  void join(int x, int y);
  void kill(int d) { darts_[d].alive = false; }
  /// Remove d from the rotation at its origin and kill it.
  void detach(int d);

  /// Handles to darts that follow them through every operation.
  int add_anchor(int d);
  int anchor(int handle) const { return anchors_[handle]; }
  int num_anchors() const { return static_cast<int>(anchors_.size()); }
  void set_anchor(int handle, int d) { anchors_[handle] = d; }
  /// Move anchors on darts about to be removed to a surviving dart of the
  /// same face. `doomed` is indexed by dart.
  void reanchor_off(const std::vector<bool>& doomed);

  Result finalize(int genus) const;
  Result finalize() const { return finalize(genus_); }

 private:
  void suppress(int v_dart);  // valence-2 vertex containing this dart

  int genus_ = 0;
  int num_vertices_ = 0;
  std::vector<Dart> darts_;
  std::vector<Curve> curves_;
  std::vector<int> anchors_;
};

}  // namespace hfdts
