#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hfdts/rational.hpp"

namespace hfdts {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// Column-style Hermite reduction A U = [H | 0] with U unimodular.
struct ColumnEchelon {
  IntMatrix h;                 // rows x cols, columns >= rank are zero
  IntMatrix u;                 // cols x cols unimodular
  std::vector<int> pivot_rows;  // pivot row of column k, k < rank
  int rank() const { return static_cast<int>(pivot_rows.size()); }
};

ColumnEchelon column_echelon(const IntMatrix& a, int cols);

/// Z-basis of the integer kernel {v in Z^cols : a v = 0}.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a, int cols);

/// Some integer v with a v = b, if one exists.
std::optional<IntVector> integer_solve(const IntMatrix& a, int cols, const IntVector& b);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form over Q, together with the row transform that
/// produced it (transform * original == reduced).
struct RationalRref {
  RationalMatrix reduced;
  RationalMatrix transform;
  std::vector<int> pivots;  // pivot column of row i
};

RationalRref rational_rref(const IntMatrix& a, int cols);

}  // namespace hfdts

namespace hfdts {

/// Integer combination c of the given vectors with sum_i c_i v_i >= 0 and
/// nonzero, if one exists (Fourier-Motzkin on the coefficient space).
std::optional<IntVector> nonnegative_combination(const std::vector<IntVector>& vectors);

/// Determinant of a square matrix (fraction-free elimination).
std::int64_t determinant(IntMatrix m);

}  // namespace hfdts
