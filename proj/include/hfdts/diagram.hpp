#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hfdts/cell_complex.hpp"
#include "hfdts/rational.hpp"

namespace hfdts {

/// Heegaard diagram as a view of a complex: the listed alpha and beta curves
/// are real, every other curve is transparent. Named regions (z, w, marks)
/// are faces of the complex; `basepoints` says which of them act as
/// basepoints in this view.
struct HeegaardDiagram {
  CellComplex complex;
  std::vector<int> alpha;  // curve indices
  std::vector<int> beta;
  std::map<std::string, int> points;  // "z", "w", "Dstar", "Dstarstar", "Dz", "Dw"
  std::set<std::string> basepoints{"z"};
  bool knot_adapted = false;

  int genus() const { return complex.genus(); }
  int z() const { return points.at("z"); }
  std::optional<int> w() const;
  bool has_w() const { return basepoints.count("w") > 0 && points.count("w") > 0; }
  /// Faces acting as basepoints in this view.
  std::vector<int> basepoint_faces() const;
};

/// Checks the view-level invariants; empty when fine.
std::vector<std::string> check_diagram(const HeegaardDiagram& d);

/// Regions of a view: faces of the complex merged across transparent arcs.
class DiagramView {
 public:
  explicit DiagramView(const HeegaardDiagram& d);

  const HeegaardDiagram& diagram() const { return *d_; }
  int num_classes() const { return num_classes_; }
  int class_of_face(int f) const { return face_class_[f]; }
  int alpha_index(int curve) const { return alpha_index_[curve]; }
  int beta_index(int curve) const { return beta_index_[curve]; }
  bool real(int curve) const { return alpha_index_[curve] >= 0 || beta_index_[curve] >= 0; }

  /// Vertices where alpha_i meets beta_j.
  const std::vector<int>& crossings(int i, int j) const { return crossings_[i][j]; }
  /// Alpha / beta index of a corner vertex, -1 when the vertex is not alpha x beta.
  int vertex_alpha(int v) const { return vertex_alpha_[v]; }
  int vertex_beta(int v) const { return vertex_beta_[v]; }

  int corners(int cls) const { return corners_[cls]; }
  int euler_char(int cls) const { return chi_[cls]; }
  Rational euler_measure(int cls) const { return Rational(chi_[cls]) - Rational(corners_[cls], 4); }
  const std::vector<int>& faces_of_class(int cls) const { return class_faces_[cls]; }
  bool is_disk(int cls) const { return chi_[cls] == 1; }

  /// Classes of the four sectors at a vertex, in counter-clockwise order.
  std::array<int, 4> sector_classes(int v) const;

  std::vector<int> basepoint_classes() const;
  int class_of_point(const std::string& name) const;

  /// Classes that are neither basepoint classes nor disks with 2 or 4 corners.
  std::vector<int> bad_classes() const;
  /// max(corners - 4, 0) + 1, plus 4 |1 - chi| when not a disk.
  int class_badness(int cls) const;
  /// Sum of class_badness over the bad classes.
  int badness() const;

 private:
  const HeegaardDiagram* d_;
  int num_classes_ = 0;
  std::vector<int> face_class_;
  std::vector<int> alpha_index_, beta_index_;
  std::vector<int> vertex_alpha_, vertex_beta_;
  std::vector<std::vector<std::vector<int>>> crossings_;
  std::vector<int> corners_, chi_;
  std::vector<std::vector<int>> class_faces_;
};

/// Result of a niceness check: offending classes (by one face id each).
struct NiceVerdict {
  bool nice = true;
  std::vector<int> offending_faces;
};

NiceVerdict is_nice(const HeegaardDiagram& d);

}  // namespace hfdts
