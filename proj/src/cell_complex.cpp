#include "hfdts/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hfdts/error.hpp"

namespace hfdts {

std::string family_name(Family f) {
  switch (f) {
    case Family::Alpha:
      return "alpha";
    case Family::Beta:
      return "beta";
    case Family::Aux:
      return "aux";
  }
  return "aux";
}

Family parse_family(const std::string& s) {
  if (s == "alpha") return Family::Alpha;
  if (s == "beta") return Family::Beta;
  if (s == "aux") return Family::Aux;
  throw Error(ErrorCode::InvalidInput, "unknown curve family '" + s + "'");
}

namespace {

struct Indexed {
  std::map<int, int> vertex;        // raw id -> index
  std::map<int, int> arc;           // raw id -> index
  std::map<std::string, int> curve;  // raw id -> index
};

// Signed raw arc reference -> dart, or -1.
int dart_of(const Indexed& ix, int ref) {
  auto it = ix.arc.find(std::abs(ref));
  if (ref == 0 || it == ix.arc.end()) return -1;
  return 2 * it->second + (ref < 0 ? 1 : 0);
}

}  // namespace

Diagnostics validate(const RawComplex& raw) {
  Diagnostics out;
  auto fail = [&](const std::string& s) { out.violations.push_back(s); };
  Indexed ix;
  if (raw.genus < 0) fail("negative genus");
  for (int v : raw.vertices)
    if (!ix.vertex.emplace(v, static_cast<int>(ix.vertex.size())).second) fail("duplicate vertex " + std::to_string(v));
  for (const auto& c : raw.curves)
    if (!ix.curve.emplace(c.id, static_cast<int>(ix.curve.size())).second) fail("duplicate curve " + c.id);
  for (const auto& a : raw.arcs) {
    if (a.id <= 0) fail("arc id " + std::to_string(a.id) + " not positive");
    if (!ix.arc.emplace(a.id, static_cast<int>(ix.arc.size())).second) fail("duplicate arc " + std::to_string(a.id));
    if (!ix.curve.count(a.curve)) fail("arc " + std::to_string(a.id) + " names unknown curve " + a.curve);
    if (!ix.vertex.count(a.from) || !ix.vertex.count(a.to))
      fail("arc " + std::to_string(a.id) + " has unknown endpoint");
  }
  if (!out.ok()) return out;

  const int n_arcs = static_cast<int>(raw.arcs.size());
  std::vector<int> owner(n_arcs, -1);
  for (const auto& c : raw.curves) {
    if (c.arcs.empty()) fail("curve " + c.id + " has no arcs");
    for (std::size_t i = 0; i < c.arcs.size(); ++i) {
      auto it = ix.arc.find(c.arcs[i]);
      if (it == ix.arc.end()) {
        fail("curve " + c.id + " lists unknown arc " + std::to_string(c.arcs[i]));
        continue;
      }
      const auto& a = raw.arcs[it->second];
      if (a.curve != c.id) fail("arc " + std::to_string(a.id) + " listed on curve " + c.id + " but labeled " + a.curve);
      if (owner[it->second] >= 0) fail("arc " + std::to_string(a.id) + " listed twice on curves");
      owner[it->second] = ix.curve[c.id];
      auto jt = ix.arc.find(c.arcs[(i + 1) % c.arcs.size()]);
      if (jt != ix.arc.end() && raw.arcs[jt->second].from != a.to)
        fail("curve " + c.id + " breaks after arc " + std::to_string(a.id));
    }
  }
  for (int k = 0; k < n_arcs; ++k)
    if (owner[k] < 0) fail("arc " + std::to_string(raw.arcs[k].id) + " not on any curve");

  auto start = [&](int d) {
    const auto& a = raw.arcs[d / 2];
    return ix.vertex.at(d % 2 == 0 ? a.from : a.to);
  };
  std::vector<int> seen(2 * n_arcs, 0);
  std::vector<int> sigma(2 * n_arcs, -1);
  for (const auto& r : raw.regions) {
    if (r.boundary.empty()) fail("region " + std::to_string(r.id) + " has empty boundary");
    bool refs_ok = true;
    for (int ref : r.boundary) {
      const int d = dart_of(ix, ref);
      if (d < 0) {
        fail("region " + std::to_string(r.id) + " references unknown arc " + std::to_string(ref));
        refs_ok = false;
      } else {
        ++seen[d];
      }
    }
    if (!refs_ok) continue;
    for (std::size_t i = 0; i < r.boundary.size(); ++i) {
      const int d = dart_of(ix, r.boundary[i]);
      const int e = dart_of(ix, r.boundary[(i + 1) % r.boundary.size()]);
      if (start(d ^ 1) != start(e)) {
        fail("region " + std::to_string(r.id) + " boundary breaks after arc " + std::to_string(r.boundary[i]));
        continue;
      }
      sigma[e] = d ^ 1;
    }
  }
  for (int k = 0; k < n_arcs; ++k)
    if (seen[2 * k] != 1 || seen[2 * k + 1] != 1) fail("arc not two-sided: " + std::to_string(raw.arcs[k].id));
  if (!out.ok()) return out;

  // Rotation system at each vertex.
  std::vector<std::vector<int>> at(raw.vertices.size());
  for (int d = 0; d < 2 * n_arcs; ++d) at[start(d)].push_back(d);
  for (std::size_t v = 0; v < at.size(); ++v) {
    const std::string vname = std::to_string(raw.vertices[v]);
    if (at[v].size() != 4) {
      fail("vertex " + vname + " not 4-valent");
      continue;
    }
    int d = at[v][0], len = 0;
    do {
      d = sigma[d];
      ++len;
    } while (d != at[v][0] && len <= 4);
    if (len != 4) {
      fail("vertex " + vname + " rotation is not a single cycle");
      continue;
    }
    for (int e : at[v]) {
      if (owner[e / 2] == owner[sigma[e] / 2]) fail("vertex " + vname + " does not alternate curves");
      if (owner[e / 2] != owner[sigma[sigma[e]] / 2]) fail("vertex " + vname + ": curve does not pass through");
    }
  }
  const long chi = static_cast<long>(raw.vertices.size()) - n_arcs + static_cast<long>(raw.regions.size());
  if (chi != 2 - 2L * raw.genus)
    fail("Euler characteristic " + std::to_string(chi) + " does not match genus " + std::to_string(raw.genus));
  return out;
}

CellComplex::CellComplex(int genus, std::vector<int> origin, std::vector<int> sigma, std::vector<int> curve,
                         std::vector<CurveInfo> curves)
    : genus_(genus), origin_(std::move(origin)), sigma_(std::move(sigma)), curve_(std::move(curve)),
      curves_(std::move(curves)) {
  build_derived();
}

void CellComplex::build_derived() {
  const int n = num_darts();
  if (n % 2 != 0 || static_cast<int>(sigma_.size()) != n || static_cast<int>(curve_.size()) != n)
    throw Error(ErrorCode::InvalidComplex, "inconsistent dart arrays");
  sigma_inv_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (sigma_[d] < 0 || sigma_[d] >= n || sigma_inv_[sigma_[d]] >= 0)
      throw Error(ErrorCode::InvalidComplex, "rotation is not a permutation");
    sigma_inv_[sigma_[d]] = d;
  }
  int nv = 0;
  for (int d = 0; d < n; ++d) nv = std::max(nv, origin_[d] + 1);
  vertex_darts_.assign(nv, {-1, -1, -1, -1});
  std::vector<int> count(nv, 0);
  for (int d = 0; d < n; ++d) {
    const int v = origin_[d];
    if (count[v]++ == 0) {
      int e = d;
      for (int k = 0; k < 4; ++k) {
        if (origin_[e] != v) throw Error(ErrorCode::InvalidComplex, "rotation leaves vertex");
        vertex_darts_[v][k] = e;
        e = sigma_[e];
      }
      if (e != d) throw Error(ErrorCode::InvalidComplex, "vertex " + std::to_string(v) + " not 4-valent");
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (count[v] != 4) throw Error(ErrorCode::InvalidComplex, "vertex " + std::to_string(v) + " not 4-valent");
    for (int d : vertex_darts_[v]) {
      if (curve_[d] == curve_[sigma_[d]]) throw Error(ErrorCode::InvalidComplex, "vertex does not alternate curves");
      if (curve_[d] != curve_[sigma_[sigma_[d]]] || forward(d) == forward(sigma_[sigma_[d]]))
        throw Error(ErrorCode::InvalidComplex, "curve does not pass straight through vertex");
    }
  }
  face_.assign(n, -1);
  faces_.clear();
  for (int d = 0; d < n; ++d) {
    if (face_[d] >= 0) continue;
    const int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    int e = d;
    do {
      face_[e] = f;
      faces_.back().push_back(e);
      e = next(e);
    } while (e != d);
  }
  const long chi = static_cast<long>(nv) - num_arcs() + num_faces();
  if (chi != 2 - 2L * genus_)
    throw Error(ErrorCode::InvalidComplex,
                "Euler characteristic " + std::to_string(chi) + " does not match genus " + std::to_string(genus_));
  for (int c = 0; c < num_curves(); ++c) {
    const auto& ds = curves_[c].darts;
    if (ds.empty()) throw Error(ErrorCode::InvalidComplex, "curve " + curves_[c].name + " has no arcs");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const int d = ds[i];
      if (!forward(d) || curve_[d] != c) throw Error(ErrorCode::InvalidComplex, "bad curve dart list");
      if (sigma_[sigma_[twin(d)]] != ds[(i + 1) % ds.size()])
        throw Error(ErrorCode::InvalidComplex, "curve " + curves_[c].name + " dart list is not a traversal");
    }
  }
  std::vector<int> listed(num_arcs(), 0);
  for (const auto& c : curves_)
    for (int d : c.darts) ++listed[d / 2];
  if (std::any_of(listed.begin(), listed.end(), [](int k) { return k != 1; }))
    throw Error(ErrorCode::InvalidComplex, "arcs not partitioned by curves");
}

CellComplex CellComplex::from_raw(const RawComplex& raw) {
  const auto diag = validate(raw);
  if (!diag.ok()) {
    std::ostringstream os;
    for (std::size_t i = 0; i < diag.violations.size(); ++i) os << (i ? "; " : "") << diag.violations[i];
    throw Error(ErrorCode::InvalidComplex, os.str());
  }
  Indexed ix;
  for (int v : raw.vertices) ix.vertex.emplace(v, static_cast<int>(ix.vertex.size()));
  for (const auto& a : raw.arcs) ix.arc.emplace(a.id, static_cast<int>(ix.arc.size()));
  for (const auto& c : raw.curves) ix.curve.emplace(c.id, static_cast<int>(ix.curve.size()));
  const int n = 2 * static_cast<int>(raw.arcs.size());
  std::vector<int> origin(n), sigma(n), curve(n);
  for (std::size_t k = 0; k < raw.arcs.size(); ++k) {
    const auto& a = raw.arcs[k];
    origin[2 * k] = ix.vertex.at(a.from);
    origin[2 * k + 1] = ix.vertex.at(a.to);
    curve[2 * k] = curve[2 * k + 1] = ix.curve.at(a.curve);
  }
  for (const auto& r : raw.regions)
    for (std::size_t i = 0; i < r.boundary.size(); ++i) {
      const int d = dart_of(ix, r.boundary[i]);
      const int e = dart_of(ix, r.boundary[(i + 1) % r.boundary.size()]);
      sigma[e] = d ^ 1;
    }
  std::vector<CurveInfo> curves;
  for (const auto& c : raw.curves) {
    CurveInfo info{c.id, c.family, {}};
    for (int a : c.arcs) info.darts.push_back(2 * ix.arc.at(a));
    curves.push_back(std::move(info));
  }
  return CellComplex(raw.genus, std::move(origin), std::move(sigma), std::move(curve), std::move(curves));
}

CellComplex CellComplex::from_rotation(int genus, std::vector<int> origin, std::vector<int> sigma,
                                       std::vector<int> curve,
                                       const std::vector<std::pair<std::string, Family>>& names) {
  const int n = static_cast<int>(origin.size());
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(curve.size()) != n)
    throw Error(ErrorCode::InvalidComplex, "inconsistent dart arrays");
  std::vector<CurveInfo> curves;
  for (const auto& [name, fam] : names) curves.push_back({name, fam, {}});
  for (int d = 0; d < n; ++d)
    if (sigma[d] < 0 || sigma[d] >= n) throw Error(ErrorCode::InvalidComplex, "rotation out of range");
  for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
    int start = -1;
    for (int d = 0; d < n && start < 0; d += 2)
      if (curve[d] == c) start = d;
    if (start < 0) throw Error(ErrorCode::InvalidComplex, "curve " + curves[c].name + " has no arcs");
    int d = start;
    do {
      curves[c].darts.push_back(d);
      d = sigma[sigma[twin(d)]];
      if (static_cast<int>(curves[c].darts.size()) > n || !forward(d))
        throw Error(ErrorCode::InvalidComplex, "curve " + curves[c].name + " is not consistently oriented");
    } while (d != start);
  }
  return CellComplex(genus, std::move(origin), std::move(sigma), std::move(curve), std::move(curves));
}

RawComplex CellComplex::to_raw() const {
  RawComplex raw;
  raw.genus = genus_;
  for (int v = 0; v < num_vertices(); ++v) raw.vertices.push_back(v + 1);
  for (const auto& c : curves_) {
    RawComplex::Curve rc{c.name, c.family, {}};
    for (int d : c.darts) rc.arcs.push_back(d / 2 + 1);
    raw.curves.push_back(std::move(rc));
  }
  for (int k = 0; k < num_arcs(); ++k)
    raw.arcs.push_back({k + 1, curves_[curve_[2 * k]].name, origin_[2 * k] + 1, origin_[2 * k + 1] + 1});
  for (int f = 0; f < num_faces(); ++f) {
    RawComplex::Region r{f + 1, {}};
    for (int d : faces_[f]) r.boundary.push_back(forward(d) ? d / 2 + 1 : -(d / 2 + 1));
    raw.regions.push_back(std::move(r));
  }
  return raw;
}

int CellComplex::find_curve(const std::string& name) const {
  for (int c = 0; c < num_curves(); ++c)
    if (curves_[c].name == name) return c;
  return -1;
}

std::array<int, 2> CellComplex::vertex_curves(int v) const {
  const auto& ds = vertex_darts_[v];
  return {curve_[ds[0]], curve_[ds[1]]};
}

int CellComplex::intersection_count(int a, int b) const {
  int count = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    const auto cs = vertex_curves(v);
    if ((cs[0] == a && cs[1] == b) || (cs[0] == b && cs[1] == a)) ++count;
  }
  return count;
}

}  // namespace hfdts
