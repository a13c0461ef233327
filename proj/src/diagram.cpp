#include "hfdts/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "hfdts/error.hpp"

namespace hfdts {

std::optional<int> HeegaardDiagram::w() const {
  auto it = points.find("w");
  if (it == points.end()) return std::nullopt;
  return it->second;
}

std::vector<int> HeegaardDiagram::basepoint_faces() const {
  std::vector<int> out;
  for (const auto& name : basepoints) {
    auto it = points.find(name);
    if (it != points.end()) out.push_back(it->second);
  }
  return out;
}

std::vector<std::string> check_diagram(const HeegaardDiagram& d) {
  std::vector<std::string> out;
  const auto& c = d.complex;
  const int g = c.genus();
  if (static_cast<int>(d.alpha.size()) != g) out.push_back("alpha count differs from genus");
  if (static_cast<int>(d.beta.size()) != g) out.push_back("beta count differs from genus");
  std::vector<int> role(c.num_curves(), 0);
  for (int a : d.alpha) {
    if (a < 0 || a >= c.num_curves()) {
      out.push_back("alpha curve index out of range");
      return out;
    }
    if (role[a]) out.push_back("curve " + c.curve_info(a).name + " listed twice");
    role[a] = 1;
  }
  for (int b : d.beta) {
    if (b < 0 || b >= c.num_curves()) {
      out.push_back("beta curve index out of range");
      return out;
    }
    if (role[b]) out.push_back("curve " + c.curve_info(b).name + " listed twice");
    role[b] = 2;
  }
  for (int v = 0; v < c.num_vertices(); ++v) {
    const auto cs = c.vertex_curves(v);
    if (role[cs[0]] == 1 && role[cs[1]] == 1) out.push_back("alpha curves meet at vertex " + std::to_string(v + 1));
    if (role[cs[0]] == 2 && role[cs[1]] == 2) out.push_back("beta curves meet at vertex " + std::to_string(v + 1));
  }
  if (!d.points.count("z")) out.push_back("missing basepoint z");
  for (const auto& [name, f] : d.points)
    if (f < 0 || f >= c.num_faces()) out.push_back("point " + name + " names no region");
  if (!out.empty()) return out;
  if (d.has_w()) {
    const DiagramView view(d);
    const int zc = view.class_of_point("z");
    const int wc = view.class_of_point("w");
    if (zc == wc) out.push_back("z and w share a region");
    if (d.knot_adapted && !d.beta.empty()) {
      bool adjacent = false;
      for (int dart : c.curve_info(d.beta[0]).darts) {
        const int l = view.class_of_face(c.face(dart));
        const int r = view.class_of_face(c.face(CellComplex::twin(dart)));
        if ((l == zc && r == wc) || (l == wc && r == zc)) adjacent = true;
      }
      if (!adjacent) out.push_back("z and w are not adjacent across the first beta curve");
    }
  }
  return out;
}

DiagramView::DiagramView(const HeegaardDiagram& d) : d_(&d) {
  const auto& c = d.complex;
  alpha_index_.assign(c.num_curves(), -1);
  beta_index_.assign(c.num_curves(), -1);
  for (std::size_t i = 0; i < d.alpha.size(); ++i) alpha_index_[d.alpha[i]] = static_cast<int>(i);
  for (std::size_t j = 0; j < d.beta.size(); ++j) beta_index_[d.beta[j]] = static_cast<int>(j);

  std::vector<int> parent(c.num_faces());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < c.num_arcs(); ++k) {
    if (real(c.curve(2 * k))) continue;
    const int a = find(c.face(2 * k)), b = find(c.face(2 * k + 1));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  face_class_.assign(c.num_faces(), -1);
  for (int f = 0; f < c.num_faces(); ++f) {
    const int r = find(f);
    if (face_class_[r] < 0) face_class_[r] = num_classes_++;
    face_class_[f] = face_class_[r];
  }
  class_faces_.assign(num_classes_, {});
  chi_.assign(num_classes_, 0);
  corners_.assign(num_classes_, 0);
  for (int f = 0; f < c.num_faces(); ++f) {
    class_faces_[face_class_[f]].push_back(f);
    ++chi_[face_class_[f]];
  }
  for (int k = 0; k < c.num_arcs(); ++k)
    if (!real(c.curve(2 * k))) --chi_[face_class_[c.face(2 * k)]];

  const int g_a = static_cast<int>(d.alpha.size()), g_b = static_cast<int>(d.beta.size());
  crossings_.assign(g_a, std::vector<std::vector<int>>(g_b));
  vertex_alpha_.assign(c.num_vertices(), -1);
  vertex_beta_.assign(c.num_vertices(), -1);
  for (int v = 0; v < c.num_vertices(); ++v) {
    const auto cs = c.vertex_curves(v);
    if (!real(cs[0]) && !real(cs[1])) {
      ++chi_[face_class_[c.face(c.vertex_darts(v)[0])]];
      continue;
    }
    int ai = -1, bj = -1;
    for (int cv : cs) {
      if (alpha_index_[cv] >= 0) ai = alpha_index_[cv];
      if (beta_index_[cv] >= 0) bj = beta_index_[cv];
    }
    if (ai < 0 || bj < 0) continue;
    vertex_alpha_[v] = ai;
    vertex_beta_[v] = bj;
    crossings_[ai][bj].push_back(v);
    for (int dart : c.vertex_darts(v)) ++corners_[face_class_[c.face(dart)]];
  }
}

std::array<int, 4> DiagramView::sector_classes(int v) const {
  const auto& c = d_->complex;
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = face_class_[c.face(c.vertex_darts(v)[k])];
  return out;
}

int DiagramView::class_of_point(const std::string& name) const {
  auto it = d_->points.find(name);
  if (it == d_->points.end()) throw Error(ErrorCode::MissingMarks, "no region named " + name);
  return face_class_[it->second];
}

std::vector<int> DiagramView::basepoint_classes() const {
  std::vector<int> out;
  for (int f : d_->basepoint_faces()) out.push_back(face_class_[f]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> DiagramView::bad_classes() const {
  const auto bp = basepoint_classes();
  std::vector<int> out;
  for (int k = 0; k < num_classes_; ++k) {
    if (std::binary_search(bp.begin(), bp.end(), k)) continue;
    if (is_disk(k) && (corners_[k] == 2 || corners_[k] == 4)) continue;
    out.push_back(k);
  }
  return out;
}

int DiagramView::class_badness(int cls) const {
  return std::max(corners_[cls] - 4, 0) + 1 + (chi_[cls] != 1 ? 4 * std::abs(1 - chi_[cls]) : 0);
}

int DiagramView::badness() const {
  int total = 0;
  for (int k : bad_classes()) total += class_badness(k);
  return total;
}

NiceVerdict is_nice(const HeegaardDiagram& d) {
  const DiagramView view(d);
  NiceVerdict out;
  for (int k : view.bad_classes()) out.offending_faces.push_back(view.faces_of_class(k).front());
  out.nice = out.offending_faces.empty();
  return out;
}

}  // namespace hfdts
