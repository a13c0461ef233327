#include "hfdts/homology.hpp"

#include <algorithm>

#include "hfdts/error.hpp"

namespace hfdts {

ChainComplexF2::ChainComplexF2(std::vector<std::string> labels, F2Matrix d)
    : labels_(std::move(labels)), d_(std::move(d)) {
  if (d_.rows() != d_.cols()) throw Error(ErrorCode::NotAComplex, "differential is not square");
  if (static_cast<int>(labels_.size()) != d_.rows())
    throw Error(ErrorCode::NotAComplex, "label count does not match differential size");
  if (!(d_ * d_).is_zero()) throw Error(ErrorCode::NotAComplex, "d^2 != 0");
}

ChainMapF2::ChainMapF2(ChainComplexF2 source, ChainComplexF2 target, F2Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.size() || matrix_.cols() != source_.size())
    throw Error(ErrorCode::NotChainMap, "matrix shape does not match complexes");
  if (!(target_.differential() * matrix_ == matrix_ * source_.differential()))
    throw Error(ErrorCode::NotChainMap, "d f != f d");
}

int homology_rank(const ChainComplexF2& c) {
  const int r = rank(c.differential());
  return c.size() - 2 * r;
}

HomologyBasis::HomologyBasis(const ChainComplexF2& c) : n_(c.size()), d_(c.differential()) {
  const auto boundaries = column_space_basis(d_);
  boundary_rank_ = static_cast<int>(boundaries.size());
  const auto cycles = kernel_basis(d_);
  // Greedily extend the boundary basis by cycles.
  std::vector<std::vector<bool>> cols = boundaries;
  int current = boundary_rank_;
  for (const auto& z : cycles) {
    cols.push_back(z);
    if (hfdts::rank(from_columns(n_, cols)) > current) {
      ++current;
      reps_.push_back(z);
    } else {
      cols.pop_back();
    }
  }
  basis_ = from_columns(n_, cols);
}

std::vector<bool> HomologyBasis::coordinates(const std::vector<bool>& z) const {
  const auto dz = d_.apply(z);
  if (std::any_of(dz.begin(), dz.end(), [](bool b) { return b; }))
    throw Error(ErrorCode::InvalidInput, "vector is not a cycle");
  auto x = solve(basis_, z);
  if (!x) throw Error(ErrorCode::ConsistencyFailure, "cycle outside cycle-space basis");
  return std::vector<bool>(x->begin() + boundary_rank_, x->end());
}

namespace {

InducedMap induced_between(const HomologyBasis& src, const HomologyBasis& dst, const F2Matrix& m) {
  InducedMap out;
  out.matrix = F2Matrix(dst.rank(), src.rank());
  for (int j = 0; j < src.rank(); ++j) {
    const auto image = m.apply(src.representatives()[j]);
    const auto coords = dst.coordinates(image);
    for (int i = 0; i < dst.rank(); ++i)
      if (coords[i]) out.matrix.set(i, j, true);
  }
  out.image_rank = rank(out.matrix);
  out.kernel_rank = src.rank() - out.image_rank;
  return out;
}

}  // namespace

InducedMap induced_map(const ChainMapF2& f) {
  const HomologyBasis src(f.source());
  const HomologyBasis dst(f.target());
  return induced_between(src, dst, f.matrix());
}

ChainComplexF2 mapping_cone(const ChainMapF2& f) {
  const int nt = f.target().size();
  const int ns = f.source().size();
  F2Matrix d(nt + ns, nt + ns);
  d.set_block(0, 0, f.target().differential());
  d.set_block(0, nt, f.matrix());
  d.set_block(nt, nt, f.source().differential());
  std::vector<std::string> labels = f.target().labels();
  labels.insert(labels.end(), f.source().labels().begin(), f.source().labels().end());
  return ChainComplexF2(std::move(labels), std::move(d));
}

ChainMapF2 cone_inclusion(const ChainMapF2& f) {
  const int nt = f.target().size();
  const int ns = f.source().size();
  F2Matrix m(nt + ns, nt);
  for (int i = 0; i < nt; ++i) m.set(i, i, true);
  return ChainMapF2(f.target(), mapping_cone(f), std::move(m));
}

ChainMapF2 cone_projection(const ChainMapF2& f) {
  const int nt = f.target().size();
  const int ns = f.source().size();
  F2Matrix m(ns, nt + ns);
  for (int i = 0; i < ns; ++i) m.set(i, nt + i, true);
  return ChainMapF2(mapping_cone(f), f.source(), std::move(m));
}

InducedMap connecting_morphism(const ChainMapF2& inclusion, const ChainMapF2& projection) {
  const auto& a = inclusion.source();
  const auto& mid = inclusion.target();
  const auto& c = projection.target();
  if (!(projection.source().differential() == mid.differential()))
    throw Error(ErrorCode::NotExact, "inclusion target and projection source differ");
  const int ri = rank(inclusion.matrix());
  const int rp = rank(projection.matrix());
  if (ri != a.size()) throw Error(ErrorCode::NotExact, "inclusion is not injective");
  if (rp != c.size()) throw Error(ErrorCode::NotExact, "projection is not surjective");
  if (!(projection.matrix() * inclusion.matrix()).is_zero())
    throw Error(ErrorCode::NotExact, "projection after inclusion is nonzero");
  if (ri + rp != mid.size()) throw Error(ErrorCode::NotExact, "sequence is not exact in the middle");

  const HomologyBasis hc(c);
  const HomologyBasis ha(a);
  InducedMap out;
  out.matrix = F2Matrix(ha.rank(), hc.rank());
  for (int j = 0; j < hc.rank(); ++j) {
    auto lift = solve(projection.matrix(), hc.representatives()[j]);
    if (!lift) throw Error(ErrorCode::NotExact, "cycle does not lift");
    const auto boundary = mid.differential().apply(*lift);
    auto pulled = solve(inclusion.matrix(), boundary);
    if (!pulled) throw Error(ErrorCode::NotExact, "boundary of lift not in image of inclusion");
    const auto coords = ha.coordinates(*pulled);
    for (int i = 0; i < ha.rank(); ++i)
      if (coords[i]) out.matrix.set(i, j, true);
  }
  out.image_rank = rank(out.matrix);
  out.kernel_rank = hc.rank() - out.image_rank;
  return out;
}

ExactnessVerdict exactness_check(const TriangleRanks& t) {
  ExactnessVerdict v;
  for (int k = 0; k < 3; ++k) {
    const int incoming = (k + 2) % 3;
    v.exact_at[k] = t.map_image[incoming] == t.map_kernel[k];
    v.rank_nullity[k] = t.map_kernel[k] + t.map_image[k] == t.homology[k];
  }
  return v;
}

}  // namespace hfdts
