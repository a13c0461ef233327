#pragma once

#include <array>
#include <string>
#include <vector>

namespace hfdts {

enum class Family { Alpha, Beta, Aux };

std::string family_name(Family f);
Family parse_family(const std::string& s);

/// Plain description of a complex, as read from or written to text.
/// Arc ids are 1-based; a region boundary lists signed arc ids, +k meaning
/// arc k traversed from endpoints[0] to endpoints[1], with the region on the left.
struct RawComplex {
  struct Curve {
    std::string id;
    Family family = Family::Aux;
    std::vector<int> arcs;
  };
  struct Arc {
    int id = 0;
    std::string curve;
    int from = 0;
    int to = 0;
  };
  struct Region {
    int id = 0;
    std::vector<int> boundary;
  };
  int genus = 0;
  std::vector<int> vertices;
  std::vector<Curve> curves;
  std::vector<Arc> arcs;
  std::vector<Region> regions;
};

struct Diagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

Diagnostics validate(const RawComplex& raw);

struct CurveInfo {
  std::string name;
  Family family = Family::Aux;
  std::vector<int> darts;  // forward darts in cyclic order
};

/// Closed oriented surface cut by transverse curves, as a combinatorial map.
/// Arc k owns darts 2k (along the curve) and 2k+1 (against it). sigma is the
/// counter-clockwise successor around a dart's origin; the face of a dart is
/// the region on its left.
class CellComplex {
 public:
  CellComplex() = default;
  CellComplex(int genus, std::vector<int> origin, std::vector<int> sigma, std::vector<int> curve,
              std::vector<CurveInfo> curves);

  static CellComplex from_raw(const RawComplex& raw);
  /// Build from per-dart data; curve dart lists are traced from the first
  /// forward dart of each curve.
  static CellComplex from_rotation(int genus, std::vector<int> origin, std::vector<int> sigma, std::vector<int> curve,
                                   const std::vector<std::pair<std::string, Family>>& names);
  RawComplex to_raw() const;

  int genus() const noexcept { return genus_; }
  int num_darts() const noexcept { return static_cast<int>(origin_.size()); }
  int num_arcs() const noexcept { return num_darts() / 2; }
  int num_vertices() const noexcept { return static_cast<int>(vertex_darts_.size()); }
  int num_faces() const noexcept { return static_cast<int>(faces_.size()); }
  int num_curves() const noexcept { return static_cast<int>(curves_.size()); }

  static int twin(int d) noexcept { return d ^ 1; }
  static bool forward(int d) noexcept { return (d & 1) == 0; }
  int origin(int d) const { return origin_[d]; }
  int target(int d) const { return origin_[twin(d)]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int next(int d) const { return sigma_inv_[twin(d)]; }
  int face(int d) const { return face_[d]; }
  int curve(int d) const { return curve_[d]; }
  Family family_of(int d) const { return curves_[curve_[d]].family; }

  const std::array<int, 4>& vertex_darts(int v) const { return vertex_darts_[v]; }
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }
  const CurveInfo& curve_info(int c) const { return curves_[c]; }
  const std::vector<CurveInfo>& curves() const noexcept { return curves_; }
  int find_curve(const std::string& name) const;  // -1 if absent

  /// The two curves through a vertex (as curve indices).
  std::array<int, 2> vertex_curves(int v) const;
  /// Number of vertices where curves a and b cross.
  int intersection_count(int a, int b) const;
  /// Corner count of a face.
  int corners(int f) const { return static_cast<int>(faces_[f].size()); }

 private:
  void build_derived();

  int genus_ = 0;
  std::vector<int> origin_;
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<int> face_;
  std::vector<int> curve_;
  std::vector<std::array<int, 4>> vertex_darts_;
  std::vector<std::vector<int>> faces_;
  std::vector<CurveInfo> curves_;
};

}  // namespace hfdts
