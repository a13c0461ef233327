#pragma once

#include <string>
#include <vector>

#include "hfdts/f2_matrix.hpp"
#include "hfdts/io.hpp"

namespace hfdts {

/// n x n toroidal grid; X[c] and O[c] are the rows of the markings in column c.
struct GridDiagram {
  int n = 0;
  std::vector<int> X;
  std::vector<int> O;

  /// InvalidGrid unless X and O are permutations of 0..n-1 with no common cell.
  void check() const;
  /// Number of link components.
  int components() const;
  /// Columns shifted cyclically by k (torus translation).
  GridDiagram rotated(int k) const;
};

/// Accepts `n:2 X:[1,0] O:[0,1]` or the JSON object {"n":..,"X":[..],"O":[..]}.
/// InvalidInput on malformed text (with the character offset), InvalidGrid on
/// a bad permutation or shared cell.
GridDiagram grid_parse(const std::string& text);
Json grid_to_json(const GridDiagram& g);
GridDiagram grid_from_json(const Json& j);

/// Generator index of a permutation among all n! in lexicographic order.
long long permutation_index(const std::vector<int>& p);

/// Tilde grid differential: entry (y, x) is the number mod 2 of empty
/// rectangles from x to y.
F2Matrix grid_differential(const GridDiagram& g);
F2Matrix grid_differential_serial(const GridDiagram& g);

struct GridResult {
  int generators = 0;
  int rank = 0;
};

/// Homology rank of the tilde complex; NotAComplex if d*d != 0.
GridResult grid_tilde_rank(const GridDiagram& g, bool parallel = true);

}  // namespace hfdts
