#pragma once

#include <set>
#include <string>
#include <vector>

#include "hfdts/f2_matrix.hpp"
#include "hfdts/floer.hpp"

namespace hfdts {

/// A counted empty bigon or rectangle from generator x to generator y.
struct CountedDisk {
  int x = 0;
  int y = 0;
  IntVector coeffs;  // per region class
};

struct DifferentialOptions {
  std::set<std::string> forbidden{"z"};
  bool check_nice = true;
  bool check_admissible = true;
  bool record_disks = false;
  bool parallel = true;
};

struct DifferentialResult {
  std::vector<Generator> generators;
  F2Matrix matrix;  // entry (y, x)
  std::vector<CountedDisk> disks;
};

/// Empty embedded bigons/rectangles with zero multiplicity at every
/// forbidden basepoint, counted mod 2.
DifferentialResult differential(const HeegaardDiagram& d, const DifferentialOptions& opts = {});

/// Number of counted disks from x to y (kernel shared by both drivers).
int count_disks(const DiagramView& view, const DomainSystem& sys, const Generator& x, const Generator& y,
                std::vector<IntVector>* disks);

/// Column-by-column drivers over all generator pairs.
F2Matrix differential_serial(const DiagramView& view, const DomainSystem& sys, const std::vector<Generator>& gens,
                             std::vector<CountedDisk>* disks);
F2Matrix differential_parallel(const DiagramView& view, const DomainSystem& sys, const std::vector<Generator>& gens,
                               std::vector<CountedDisk>* disks);

/// Number of coordinates where two generators differ.
int coordinate_distance(const Generator& x, const Generator& y);

}  // namespace hfdts
