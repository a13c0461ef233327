#pragma once

#include <string>
#include <vector>

#include "hfdts/f2_matrix.hpp"

namespace hfdts {

/// Free F2 complex on labeled generators. Construction asserts d*d == 0.
class ChainComplexF2 {
 public:
  ChainComplexF2() = default;
  ChainComplexF2(std::vector<std::string> labels, F2Matrix d);

  int size() const noexcept { return d_.rows(); }
  const F2Matrix& differential() const noexcept { return d_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
  F2Matrix d_;
};

/// A chain map source -> target; matrix is target.size() x source.size().
class ChainMapF2 {
 public:
  ChainMapF2(ChainComplexF2 source, ChainComplexF2 target, F2Matrix matrix);

  const ChainComplexF2& source() const noexcept { return source_; }
  const ChainComplexF2& target() const noexcept { return target_; }
  const F2Matrix& matrix() const noexcept { return matrix_; }

 private:
  ChainComplexF2 source_;
  ChainComplexF2 target_;
  F2Matrix matrix_;
};

int homology_rank(const ChainComplexF2& c);

/// Cycle representatives of a homology basis, plus coordinates of any cycle in it.
class HomologyBasis {
 public:
  explicit HomologyBasis(const ChainComplexF2& c);

  int rank() const noexcept { return static_cast<int>(reps_.size()); }
  const std::vector<std::vector<bool>>& representatives() const noexcept { return reps_; }

  /// Coordinates of the class of cycle z. Throws if z is not a cycle.
  std::vector<bool> coordinates(const std::vector<bool>& z) const;

 private:
  int n_ = 0;
  int boundary_rank_ = 0;
  std::vector<std::vector<bool>> reps_;
  F2Matrix d_;
  F2Matrix basis_;  // columns: boundary basis followed by reps
};

struct InducedMap {
  F2Matrix matrix;  // rank(H(target)) x rank(H(source))
  int kernel_rank = 0;
  int image_rank = 0;
};

InducedMap induced_map(const ChainMapF2& f);

/// Cone of f: source -> target, on target (+) source with
/// differential [[d_target, f], [0, d_source]].
ChainComplexF2 mapping_cone(const ChainMapF2& f);

/// Snake-lemma connecting map H(C) -> H(A) of 0 -> A -i-> M -p-> C -> 0.
InducedMap connecting_morphism(const ChainMapF2& inclusion, const ChainMapF2& projection);

/// Canonical inclusion target -> cone and projection cone -> source.
ChainMapF2 cone_inclusion(const ChainMapF2& f);
ChainMapF2 cone_projection(const ChainMapF2& f);

struct TriangleRanks {
  int homology[3] = {0, 0, 0};   // node k
  int map_kernel[3] = {0, 0, 0};  // map k goes node k -> node k+1
  int map_image[3] = {0, 0, 0};
};

struct ExactnessVerdict {
  bool exact_at[3] = {false, false, false};
  bool rank_nullity[3] = {false, false, false};
  bool all() const {
    for (int k = 0; k < 3; ++k)
      if (!exact_at[k] || !rank_nullity[k]) return false;
    return true;
  }
};

ExactnessVerdict exactness_check(const TriangleRanks& t);

}  // namespace hfdts
