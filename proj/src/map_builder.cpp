#include "hfdts/map_builder.hpp"

#include <algorithm>
#include <map>

#include "hfdts/error.hpp"

namespace hfdts {

MapBuilder::MapBuilder(const CellComplex& c) : genus_(c.genus()), num_vertices_(c.num_vertices()) {
  darts_.resize(c.num_darts());
  for (int d = 0; d < c.num_darts(); ++d) {
    auto& x = darts_[d];
    x.origin = c.origin(d);
    x.twin = CellComplex::twin(d);
    x.sigma = c.sigma(d);
    x.sigma_inv = c.sigma_inv(d);
    x.curve = c.curve(d);
    x.forward = CellComplex::forward(d);
  }
  for (const auto& info : c.curves()) curves_.push_back({info.name, info.family, false});
}

int MapBuilder::find_curve(const std::string& name) const {
  for (int c = 0; c < num_curves(); ++c)
    if (curves_[c].name == name) return c;
  return -1;
}

std::vector<int> MapBuilder::curve_darts(int c) const {
  int start = -1;
  for (int d = 0; d < num_darts() && start < 0; ++d)
    if (darts_[d].alive && darts_[d].curve == c && darts_[d].forward) start = d;
  std::vector<int> out;
  if (start < 0) return out;
  int d = start;
  do {
    out.push_back(d);
    d = sigma(sigma(twin(d)));
    if (static_cast<int>(out.size()) > num_darts()) throw Error(ErrorCode::InvalidComplex, "curve trace diverged");
  } while (d != start);
  return out;
}

std::vector<int> MapBuilder::face_of(int d) const {
  std::vector<int> out;
  int e = d;
  do {
    out.push_back(e);
    e = next(e);
    if (static_cast<int>(out.size()) > num_darts()) throw Error(ErrorCode::InvalidComplex, "face trace diverged");
  } while (e != d);
  return out;
}

int MapBuilder::add_curve(const std::string& name, Family family, bool scratch) {
  curves_.push_back({name, family, scratch});
  return num_curves() - 1;
}

void MapBuilder::set_curve(int d, int c) {
  darts_[d].curve = c;
  darts_[twin(d)].curve = c;
}

void MapBuilder::relabel(int from, int to) {
  for (auto& d : darts_)
    if (d.curve == from) d.curve = to;
}

int MapBuilder::new_edge(int origin_a, int origin_b, int curve, bool forward_a) {
  const int a = num_darts();
  Dart x;
  x.origin = origin_a;
  x.twin = a + 1;
  x.curve = curve;
  x.forward = forward_a;
  Dart y = x;
  y.origin = origin_b;
  y.twin = a;
  y.forward = !forward_a;
  darts_.push_back(x);
  darts_.push_back(y);
  return a;
}

void MapBuilder::set_rotation(const std::vector<int>& ccw) {
  const int k = static_cast<int>(ccw.size());
  for (int i = 0; i < k; ++i) {
    darts_[ccw[i]].sigma = ccw[(i + 1) % k];
    darts_[ccw[(i + 1) % k]].sigma_inv = ccw[i];
  }
}

int MapBuilder::split_near_origin(int d) {
  const int u = origin(d);
  const int m = new_vertex();
  const int n = new_edge(u, m, curve(d), darts_[d].forward);
  const int p = darts_[d].sigma_inv;
  const int s = darts_[d].sigma;
  darts_[p].sigma = n;
  darts_[s].sigma_inv = n;
  darts_[n].sigma = s;
  darts_[n].sigma_inv = p;
  darts_[d].origin = m;
  set_rotation({d, twin(n)});
  return n;
}

void MapBuilder::smooth(int a) {
  const int b = sigma(a), c = sigma(b), e = sigma(c);
  if (sigma(e) != a) throw Error(ErrorCode::InvalidComplex, "smoothing needs a 4-valent vertex");
  const int v2 = new_vertex();
  darts_[c].origin = v2;
  darts_[e].origin = v2;
  set_rotation({a, b});
  set_rotation({c, e});
}

void MapBuilder::join(int x, int y) {
  darts_[x].twin = y;
  darts_[y].twin = x;
}

void MapBuilder::detach(int d) {
  const int p = darts_[d].sigma_inv, s = darts_[d].sigma;
  darts_[p].sigma = s;
  darts_[s].sigma_inv = p;
  kill(d);
}

int MapBuilder::add_anchor(int d) {
  anchors_.push_back(d);
  return static_cast<int>(anchors_.size()) - 1;
}

void MapBuilder::reanchor_off(const std::vector<bool>& doomed) {
  for (auto& a : anchors_) {
    if (a < static_cast<int>(doomed.size()) && doomed[a]) {
      int e = next(a);
      while (e != a && e < static_cast<int>(doomed.size()) && doomed[e]) e = next(e);
      if (e == a) throw Error(ErrorCode::BasepointInBigon, "every dart of a basepoint region is removed");
      a = e;
    }
  }
}

void MapBuilder::suppress(int d1) {
  const int d2 = sigma(d1);
  const int x = twin(d1), y = twin(d2);
  if (x == d2) throw Error(ErrorCode::InvalidComplex, "closed curve without crossings");
  kill(d1);
  kill(d2);
  join(x, y);
  for (auto& a : anchors_) {
    if (a == d1) a = y;
    else if (a == d2) a = x;
  }
}

MapBuilder::Result MapBuilder::finalize(int genus) const {
  MapBuilder b = *this;
  const int n = b.num_darts();
  std::vector<std::vector<int>> at(b.num_vertices_);
  for (int d = 0; d < n; ++d)
    if (b.darts_[d].alive) at[b.darts_[d].origin].push_back(d);
  for (int v = 0; v < b.num_vertices_; ++v) {
    if (at[v].size() == 2) b.suppress(at[v][0]);
    else if (!at[v].empty() && at[v].size() != 4)
      throw Error(ErrorCode::InvalidComplex, "vertex of valence " + std::to_string(at[v].size()));
  }
  auto cont = [&](int d) { return b.sigma(b.sigma(b.twin(d))); };

  // Curve components and their labels.
  std::vector<int> comp(n, -1);
  std::vector<int> comp_label;
  for (int d = 0; d < n; ++d) {
    if (!b.darts_[d].alive || comp[d] >= 0) continue;
    const int id = static_cast<int>(comp_label.size());
    int label = -1, scratch_label = -1;
    bool scratch_merged = false;
    for (int dir = 0; dir < 2; ++dir) {
      int e = dir == 0 ? d : b.twin(d);
      const int s = e;
      do {
        comp[e] = id;
        const int c = b.darts_[e].curve;
        if (b.curves_[c].scratch) {
          if (scratch_label >= 0 && scratch_label != c) scratch_merged = true;
          scratch_label = c;
        } else {
          if (label >= 0 && label != c)
            throw Error(ErrorCode::InvalidComplex,
                        "curves " + b.curves_[label].name + " and " + b.curves_[c].name + " merged");
          label = c;
        }
        e = cont(e);
      } while (e != s);
    }
    if (label < 0 && scratch_merged)
      throw Error(ErrorCode::InvalidComplex, "scratch curves merged without a label");
    comp_label.push_back(label >= 0 ? label : scratch_label);
  }
  std::vector<int> label_comp(b.num_curves(), -1);
  for (int k = 0; k < static_cast<int>(comp_label.size()); ++k) {
    if (label_comp[comp_label[k]] >= 0)
      throw Error(ErrorCode::InvalidComplex, "curve " + b.curves_[comp_label[k]].name + " is disconnected");
    label_comp[comp_label[k]] = k;
  }

  Result res;
  res.dart_remap.assign(n, -1);
  res.vertex_remap.assign(b.num_vertices_, -1);
  res.curve_remap.assign(b.num_curves(), -1);
  std::vector<int> origin, curve_of;
  std::vector<CurveInfo> infos;
  std::vector<int> order;  // builder dart per final dart
  for (int c = 0; c < b.num_curves(); ++c) {
    const int k = label_comp[c];
    if (k < 0) continue;
    int start = -1, fallback = -1;
    for (int d = 0; d < n; ++d) {
      if (comp[d] != k || !b.darts_[d].alive) continue;
      if (b.darts_[d].curve == c && b.darts_[d].forward) {
        start = d;
        break;
      }
      if (fallback < 0 && b.darts_[d].curve == c) fallback = d;
    }
    if (start < 0) start = fallback >= 0 ? fallback : -1;
    if (start < 0)
      for (int d = 0; d < n && start < 0; ++d)
        if (comp[d] == k && b.darts_[d].alive && b.darts_[d].forward) start = d;
    const int ci = static_cast<int>(infos.size());
    res.curve_remap[c] = ci;
    CurveInfo info{b.curves_[c].name, b.curves_[c].family, {}};
    int e = start;
    do {
      const int arc = static_cast<int>(order.size()) / 2;
      res.dart_remap[e] = 2 * arc;
      res.dart_remap[b.twin(e)] = 2 * arc + 1;
      order.push_back(e);
      order.push_back(b.twin(e));
      info.darts.push_back(2 * arc);
      e = cont(e);
    } while (e != start);
    infos.push_back(std::move(info));
  }
  int nv = 0;
  for (int d : order) {
    const int v = b.darts_[d].origin;
    if (res.vertex_remap[v] < 0) res.vertex_remap[v] = nv++;
  }
  const int m = static_cast<int>(order.size());
  std::vector<int> sigma(m), curve(m);
  origin.resize(m);
  for (int i = 0; i < m; ++i) {
    const int d = order[i];
    origin[i] = res.vertex_remap[b.darts_[d].origin];
    sigma[i] = res.dart_remap[b.sigma(d)];
    curve[i] = res.curve_remap[comp_label[comp[d]]];
  }
  for (int a : b.anchors_) res.anchors.push_back(a >= 0 ? res.dart_remap[a] : -1);
  res.complex = CellComplex(genus, std::move(origin), std::move(sigma), std::move(curve), std::move(infos));
  return res;
}

}  // namespace hfdts
