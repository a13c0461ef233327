#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hfdts/diagram.hpp"
#include "hfdts/int_linalg.hpp"

namespace hfdts {

/// points[i] is the vertex used on alpha_i.
struct Generator {
  std::vector<int> points;
  bool operator==(const Generator& o) const { return points == o.points; }
  bool operator<(const Generator& o) const { return points < o.points; }
};

std::vector<Generator> enumerate_generators(const DiagramView& view);
std::string generator_label(const Generator& g);

/// Corner/boundary equations of a view, over its region classes, plus rows
/// pinning the forbidden classes to zero.
class DomainSystem {
 public:
  DomainSystem(const DiagramView& view, const std::vector<int>& forbidden_classes);

  int num_unknowns() const { return cols_; }
  const IntMatrix& matrix() const { return a_; }
  IntVector rhs(const Generator& x, const Generator& y) const;

  /// Solutions with every coefficient in {0, 1}.
  std::vector<IntVector> binary_solutions(const IntVector& b) const;

 private:
  const DiagramView* view_;
  int cols_ = 0;
  IntMatrix a_;
  struct Row {
    int vertex;
    int sign;  // +1 on alpha rows, -1 on beta rows
  };
  std::vector<Row> rows_;
  int forbidden_rows_ = 0;
  RationalRref rref_;
  std::vector<int> free_;
};

struct Domain {
  IntVector coeffs;  // per region class
};

struct DomainFamily {
  bool exists = false;
  Domain particular;
  std::vector<IntVector> lattice;  // periodic domains with n_z = 0
};

DomainFamily connecting_domains(const DiagramView& view, const Generator& x, const Generator& y);

/// e(D) + n_x(D) + n_y(D); throws CornerMismatch when D does not connect x to y.
Rational maslov_index(const DiagramView& view, const Domain& d, const Generator& x, const Generator& y);

/// Average of the four sector multiplicities at a vertex.
Rational point_measure(const DiagramView& view, const IntVector& coeffs, int vertex);

struct AdmissibilityVerdict {
  bool admissible = true;
  int lattice_rank = 0;
  IntVector witness;  // one-signed periodic domain when not admissible
};

AdmissibilityVerdict check_admissibility(const HeegaardDiagram& d);

}  // namespace hfdts
