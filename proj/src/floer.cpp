#include "hfdts/floer.hpp"

#include <algorithm>
#include <functional>

#include "hfdts/error.hpp"

namespace hfdts {

std::vector<Generator> enumerate_generators(const DiagramView& view) {
  const auto& d = view.diagram();
  const int g = static_cast<int>(d.alpha.size());
  const int nb = static_cast<int>(d.beta.size());
  std::vector<std::vector<int>> on_alpha(g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < nb; ++j)
      for (int v : view.crossings(i, j)) on_alpha[i].push_back(v);
    std::sort(on_alpha[i].begin(), on_alpha[i].end());
  }
  std::vector<Generator> out;
  if (g == 0 || nb != g) return out;
  Generator cur;
  cur.points.assign(g, -1);
  std::vector<bool> used(nb, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == g) {
      out.push_back(cur);
      return;
    }
    for (int v : on_alpha[i]) {
      const int j = view.vertex_beta(v);
      if (used[j]) continue;
      used[j] = true;
      cur.points[i] = v;
      rec(i + 1);
      used[j] = false;
    }
  };
  rec(0);
  return out;
}

std::string generator_label(const Generator& g) {
  std::string s;
  for (std::size_t i = 0; i < g.points.size(); ++i) s += (i ? "." : "") + std::to_string(g.points[i] + 1);
  return s;
}

DomainSystem::DomainSystem(const DiagramView& view, const std::vector<int>& forbidden_classes)
    : view_(&view), cols_(view.num_classes()) {
  const auto& c = view.diagram().complex;
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (view.vertex_alpha(v) < 0) continue;
    for (int dart : c.vertex_darts(v)) {
      if (!CellComplex::forward(dart)) continue;
      const bool is_alpha = view.alpha_index(c.curve(dart)) >= 0;
      const int out = dart;
      // The arc arriving at v along the same curve.
      const int in = CellComplex::twin(c.sigma(c.sigma(dart)));
      IntVector row(cols_, 0);
      row[view.class_of_face(c.face(in))] += 1;
      row[view.class_of_face(c.face(CellComplex::twin(in)))] -= 1;
      row[view.class_of_face(c.face(out))] -= 1;
      row[view.class_of_face(c.face(CellComplex::twin(out)))] += 1;
      a_.push_back(std::move(row));
      rows_.push_back({v, is_alpha ? 1 : -1});
    }
  }
  for (int k : forbidden_classes) {
    IntVector row(cols_, 0);
    row[k] = 1;
    a_.push_back(std::move(row));
    ++forbidden_rows_;
  }
  rref_ = rational_rref(a_, cols_);
  std::vector<bool> pivot(cols_, false);
  for (int p : rref_.pivots) pivot[p] = true;
  for (int k = 0; k < cols_; ++k)
    if (!pivot[k]) free_.push_back(k);
}

IntVector DomainSystem::rhs(const Generator& x, const Generator& y) const {
  IntVector b(a_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int v = rows_[r].vertex;
    const int in_x = std::count(x.points.begin(), x.points.end(), v) > 0;
    const int in_y = std::count(y.points.begin(), y.points.end(), v) > 0;
    b[r] = rows_[r].sign * (in_y - in_x);
  }
  return b;
}

std::vector<IntVector> DomainSystem::binary_solutions(const IntVector& b) const {
  std::vector<IntVector> out;
  const int rows = static_cast<int>(a_.size());
  const int rank = static_cast<int>(rref_.pivots.size());
  std::vector<int> support;
  for (int i = 0; i < rows; ++i)
    if (b[i] != 0) support.push_back(i);
  std::vector<Rational> tb(rows);
  for (int r = 0; r < rows; ++r) {
    Rational acc;
    for (int i : support)
      if (!rref_.transform[r][i].is_zero()) acc += rref_.transform[r][i] * Rational(b[i]);
    tb[r] = acc;
  }
  for (int r = rank; r < rows; ++r)
    if (!tb[r].is_zero()) return out;
  const int nf = static_cast<int>(free_.size());
  if (nf > 24) throw Error(ErrorCode::NotAdmissible, "domain family too large to enumerate");
  IntVector m(cols_, 0);
  for (std::uint32_t mask = 0; mask < (1u << nf); ++mask) {
    for (int j = 0; j < nf; ++j) m[free_[j]] = (mask >> j) & 1;
    bool ok = true;
    for (int r = 0; r < rank && ok; ++r) {
      Rational val = tb[r];
      for (int j = 0; j < nf; ++j)
        if (m[free_[j]] && !rref_.reduced[r][free_[j]].is_zero()) val -= rref_.reduced[r][free_[j]];
      if (val == Rational(0)) m[rref_.pivots[r]] = 0;
      else if (val == Rational(1)) m[rref_.pivots[r]] = 1;
      else ok = false;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

namespace {

IntMatrix corner_rows_with_z(const DiagramView& view, std::size_t* corner_rows = nullptr) {
  const int zc = view.class_of_point("z");
  DomainSystem sys(view, {zc});
  if (corner_rows) *corner_rows = sys.matrix().size() - 1;
  return sys.matrix();
}

}  // namespace

DomainFamily connecting_domains(const DiagramView& view, const Generator& x, const Generator& y) {
  const int zc = view.class_of_point("z");
  DomainSystem sys(view, {zc});
  DomainFamily out;
  const auto b = sys.rhs(x, y);
  auto sol = integer_solve(sys.matrix(), sys.num_unknowns(), b);
  if (!sol) return out;
  out.exists = true;
  out.particular.coeffs = *sol;
  out.lattice = integer_kernel_basis(sys.matrix(), sys.num_unknowns());
  return out;
}

Rational point_measure(const DiagramView& view, const IntVector& coeffs, int vertex) {
  Rational s;
  for (int k : view.sector_classes(vertex)) s += Rational(coeffs[k]);
  return s / Rational(4);
}

Rational maslov_index(const DiagramView& view, const Domain& d, const Generator& x, const Generator& y) {
  std::size_t corner_rows = 0;
  const auto a = corner_rows_with_z(view, &corner_rows);
  DomainSystem sys(view, {});
  const auto b = sys.rhs(x, y);
  if (static_cast<int>(d.coeffs.size()) != view.num_classes())
    throw Error(ErrorCode::CornerMismatch, "domain has the wrong number of coefficients");
  for (std::size_t r = 0; r < corner_rows; ++r) {
    std::int64_t acc = 0;
    for (int k = 0; k < view.num_classes(); ++k) acc = checked_add(acc, checked_mul(a[r][k], d.coeffs[k]));
    if (acc != b[r]) throw Error(ErrorCode::CornerMismatch, "domain boundary does not connect the generators");
  }
  Rational mu;
  for (int k = 0; k < view.num_classes(); ++k)
    if (d.coeffs[k] != 0) mu += view.euler_measure(k) * Rational(d.coeffs[k]);
  for (int v : x.points) mu += point_measure(view, d.coeffs, v);
  for (int v : y.points) mu += point_measure(view, d.coeffs, v);
  return mu;
}

AdmissibilityVerdict check_admissibility(const HeegaardDiagram& d) {
  const DiagramView view(d);
  const auto a = corner_rows_with_z(view);
  const auto basis = integer_kernel_basis(a, view.num_classes());
  AdmissibilityVerdict out;
  out.lattice_rank = static_cast<int>(basis.size());
  const auto comb = nonnegative_combination(basis);
  if (comb) {
    out.admissible = false;
    out.witness.assign(view.num_classes(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int k = 0; k < view.num_classes(); ++k)
        out.witness[k] = checked_add(out.witness[k], checked_mul((*comb)[i], basis[i][k]));
  }
  return out;
}

}  // namespace hfdts
