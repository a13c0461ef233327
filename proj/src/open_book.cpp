#include "hfdts/open_book.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "hfdts/error.hpp"
#include "hfdts/floer.hpp"
#include "hfdts/int_linalg.hpp"
#include "hfdts/surgery.hpp"

namespace hfdts {

void PageSpec::check() const {
  if (boundary == 2 && genus == 0) return;
  if (boundary == 1 && genus >= 1) return;
  throw Error(ErrorCode::UnsupportedPage, "page of genus " + std::to_string(genus) + " with " +
                                              std::to_string(boundary) + " boundary components");
}

namespace {

// The page cut open along its cut arcs is a 4n-gon whose even sides are
// copies of the cut arcs and whose odd sides are pieces of the page boundary.
// The surface is two such polygons, the page (drawn as is) and the inverted
// page (drawn mirrored), glued along the boundary pieces.
struct Polygon {
  int sides = 0;
  std::vector<int> partner;  // side -> glued side (cut arc copies only)

  std::array<double, 2> point(int half, int side, double t) const {
    const double step = 2 * std::numbers::pi / sides;
    const double a0 = step * side + 0.1, a1 = step * (side + 1) + 0.1;
    double x = std::cos(a0) * (1 - t) + std::cos(a1) * t;
    const double y = std::sin(a0) * (1 - t) + std::sin(a1) * t;
    if (half == 1) x = -x;
    return {x, y};
  }
};

struct End {
  int side;
  double t;
};

struct Chord {
  int half;  // 0 page, 1 inverted page
  End from, to;
};

struct GeoCurve {
  std::string name;
  Family family;
  std::vector<Chord> chords;
};

struct Seams {
  Polygon poly;
  std::vector<int> fwd, inv;  // side of each cut arc copy
};

Seams seams_for(const PageSpec& page) {
  Seams s;
  const int n = page.cut_arcs();
  s.poly.sides = 4 * n;
  s.poly.partner.assign(4 * n, -1);
  s.fwd.resize(n);
  s.inv.resize(n);
  if (page.boundary == 2) {
    s.fwd[0] = 0;
    s.inv[0] = 2;
  } else {
    for (int k = 0; k < page.genus; ++k) {
      s.fwd[2 * k] = 8 * k;
      s.fwd[2 * k + 1] = 8 * k + 2;
      s.inv[2 * k] = 8 * k + 4;
      s.inv[2 * k + 1] = 8 * k + 6;
    }
  }
  for (int i = 0; i < n; ++i) {
    s.poly.partner[s.fwd[i]] = s.inv[i];
    s.poly.partner[s.inv[i]] = s.fwd[i];
  }
  return s;
}

double cross(std::array<double, 2> a, std::array<double, 2> b) { return a[0] * b[1] - a[1] * b[0]; }

std::array<double, 2> sub(std::array<double, 2> a, std::array<double, 2> b) { return {a[0] - b[0], a[1] - b[1]}; }

struct Geometry {
  std::vector<GeoCurve> curves;
  std::vector<std::vector<std::pair<double, int>>> hits;  // per curve: (parameter, vertex), sorted
  std::vector<std::vector<int>> arc_of_hit;               // arc starting at each hit
  CellComplex complex;
};

bool same_end(const Polygon& p, int half_a, End a, int half_b, End b) {
  const double eps = 1e-12;
  if (a.side % 2 == 0) {
    // cut arc copy: glued to the partner side, same half, reversed parameter
    return half_a == half_b && b.side == p.partner[a.side] && std::abs(b.t - (1 - a.t)) < eps;
  }
  // boundary piece: glued to the same piece of the other half
  return half_a != half_b && a.side == b.side && std::abs(a.t - b.t) < eps;
}

Geometry build_geometry(const Polygon& poly, std::vector<GeoCurve> curves, int genus) {
  Geometry g;
  g.curves = std::move(curves);
  const int n = static_cast<int>(g.curves.size());
  for (const auto& c : g.curves)
    for (size_t k = 0; k < c.chords.size(); ++k) {
      const auto& a = c.chords[k];
      const auto& b = c.chords[(k + 1) % c.chords.size()];
      if (!same_end(poly, a.half, a.to, b.half, b.from))
        throw Error(ErrorCode::InvalidComplex, "page curve " + c.name + " is not closed");
    }
  g.hits.assign(n, {});
  std::vector<std::array<int, 2>> vcurves;
  std::vector<std::array<std::array<double, 2>, 2>> vdirs;
  int nv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (size_t ki = 0; ki < g.curves[i].chords.size(); ++ki)
        for (size_t kj = 0; kj < g.curves[j].chords.size(); ++kj) {
          const auto& a = g.curves[i].chords[ki];
          const auto& b = g.curves[j].chords[kj];
          if (a.half != b.half) continue;
          const auto p0 = poly.point(a.half, a.from.side, a.from.t), p1 = poly.point(a.half, a.to.side, a.to.t);
          const auto q0 = poly.point(b.half, b.from.side, b.from.t), q1 = poly.point(b.half, b.to.side, b.to.t);
          const auto r = sub(p1, p0), s = sub(q1, q0);
          const double den = cross(r, s);
          if (std::abs(den) < 1e-14) continue;
          const auto qp = sub(q0, p0);
          const double u = cross(qp, s) / den, v = cross(qp, r) / den;
          if (u <= 1e-9 || u >= 1 - 1e-9 || v <= 1e-9 || v >= 1 - 1e-9) continue;
          g.hits[i].push_back({ki + u, nv});
          g.hits[j].push_back({kj + v, nv});
          vcurves.push_back({i, j});
          vdirs.push_back({r, s});
          ++nv;
        }
  std::vector<int> origin, curve;
  g.arc_of_hit.assign(n, {});
  int arcs = 0;
  for (int i = 0; i < n; ++i) {
    auto& h = g.hits[i];
    std::sort(h.begin(), h.end());
    if (h.empty()) throw Error(ErrorCode::InvalidComplex, "page curve " + g.curves[i].name + " meets nothing");
    const int k = static_cast<int>(h.size());
    for (int a = 0; a < k; ++a) {
      g.arc_of_hit[i].push_back(arcs++);
      origin.push_back(h[a].second);
      origin.push_back(h[(a + 1) % k].second);
      curve.push_back(i);
      curve.push_back(i);
    }
  }
  std::map<std::pair<int, int>, std::pair<int, int>> at;  // (vertex, curve) -> (out, in)
  for (int i = 0; i < n; ++i) {
    const int k = static_cast<int>(g.hits[i].size());
    for (int a = 0; a < k; ++a)
      at[{g.hits[i][a].second, i}] = {2 * g.arc_of_hit[i][a], 2 * g.arc_of_hit[i][(a - 1 + k) % k] + 1};
  }
  std::vector<int> sigma(origin.size(), -1);
  for (int v = 0; v < nv; ++v) {
    const int i = vcurves[v][0], j = vcurves[v][1];
    const auto [oi, ii] = at[{v, i}];
    const auto [oj, ij] = at[{v, j}];
    const bool left = cross(vdirs[v][0], vdirs[v][1]) > 0;
    const std::array<int, 4> ccw = left ? std::array<int, 4>{oi, oj, ii, ij} : std::array<int, 4>{oi, ij, ii, oj};
    for (int a = 0; a < 4; ++a) sigma[ccw[a]] = ccw[(a + 1) % 4];
  }
  std::vector<std::pair<std::string, Family>> names;
  for (const auto& c : g.curves) names.emplace_back(c.name, c.family);
  g.complex = CellComplex::from_rotation(genus, origin, sigma, curve, names);
  return g;
}

// Face containing a point of one half, found by casting a ray to the first chord.
int face_at(const Polygon& poly, const Geometry& g, int half, std::array<double, 2> pt, std::array<double, 2> dir) {
  double best = 1e300;
  int best_dart = -1;
  for (size_t i = 0; i < g.curves.size(); ++i)
    for (size_t k = 0; k < g.curves[i].chords.size(); ++k) {
      const auto& a = g.curves[i].chords[k];
      if (a.half != half) continue;
      const auto p0 = poly.point(half, a.from.side, a.from.t), p1 = poly.point(half, a.to.side, a.to.t);
      const auto r = sub(p1, p0);
      const double den = cross(dir, r);
      if (std::abs(den) < 1e-14) continue;
      const auto qp = sub(p0, pt);
      const double s = cross(qp, r) / den;  // along the ray
      const double u = cross(qp, dir) / den;  // along the chord
      if (s <= 0 || u <= 0 || u >= 1 || s >= best) continue;
      const double param = k + u;
      const auto& h = g.hits[i];
      int idx = static_cast<int>(h.size()) - 1;  // arc starting at the last hit before param
      for (int m = 0; m < static_cast<int>(h.size()); ++m)
        if (h[m].first < param) idx = m;
      const int arc = g.arc_of_hit[i][idx];
      best = s;
      best_dart = cross(r, sub(pt, p0)) > 0 ? 2 * arc : 2 * arc + 1;
    }
  if (best_dart < 0) throw Error(ErrorCode::InvalidComplex, "no curve around a page point");
  return g.complex.face(best_dart);
}

}  // namespace

std::vector<std::string> page_curve_names(const PageSpec& page) {
  page.check();
  if (page.boundary == 2) return {"c"};
  if (page.genus == 1) return {"a", "b"};
  std::vector<std::string> out;
  for (int k = 1; k <= page.genus; ++k) {
    out.push_back("a" + std::to_string(k));
    out.push_back("b" + std::to_string(k));
  }
  for (int k = 1; k < page.genus; ++k) out.push_back("c" + std::to_string(k));
  return out;
}

HeegaardDiagram build_identity_diagram(const PageSpec& page) {
  page.check();
  const Seams s = seams_for(page);
  const int n = page.cut_arcs();
  const int sides = s.poly.sides;
  auto after = [&](int side) { return (side + 1) % sides; };
  auto before = [&](int side) { return (side - 1 + sides) % sides; };
  // Positions along the boundary pieces: alpha ends near the corners, the
  // beta ends pushed along the boundary orientation.
  const double ea = 0.2, eb_in = 0.3, eb_out = 0.45, mid = 0.5, core = 0.7, chain = 0.15;
  std::vector<GeoCurve> curves;
  for (int i = 0; i < n; ++i) {
    const End a0{before(s.fwd[i]), 1 - ea}, a1{after(s.fwd[i]), ea};
    curves.push_back({"alpha" + std::to_string(i + 1), Family::Alpha, {{0, a0, a1}, {1, a1, a0}}});
  }
  for (int i = 0; i < n; ++i) {
    const End start{after(s.inv[i]), eb_in}, stop{after(s.fwd[i]), eb_out};
    const End on_inv{s.inv[i], mid}, on_fwd{s.fwd[i], mid};
    curves.push_back({"beta" + std::to_string(i + 1),
                      Family::Beta,
                      {{0, start, on_inv}, {0, on_fwd, stop}, {1, stop, on_fwd}, {1, on_inv, start}}});
  }
  const auto names = page_curve_names(page);
  for (int i = 0; i < n; ++i)
    curves.push_back({names[i], Family::Aux, {{1, End{s.fwd[i], core}, End{s.inv[i], 1 - core}}}});
  // chain curves through b_k and a_{k+1}
  for (int k = 0; k + 1 < page.genus; ++k) {
    const int y = 2 * k + 1, x = 2 * k + 2;
    curves.push_back({names[n + k],
                      Family::Aux,
                      {{1, End{s.fwd[y], 1 - chain}, End{s.fwd[x], chain}},
                       {1, End{s.inv[x], 1 - chain}, End{s.inv[y], chain}}}});
  }
  const Geometry g = build_geometry(s.poly, curves, page.surface_genus());

  HeegaardDiagram d;
  d.complex = g.complex;
  for (int i = 0; i < n; ++i) {
    d.alpha.push_back(i);
    d.beta.push_back(n + i);
  }
  d.points["z"] = face_at(s.poly, g, 0, {0.0, 0.0}, {0.3141, 0.9});
  return d;
}

HeegaardDiagram tidy_beta(const HeegaardDiagram& d) {
  HeegaardDiagram cur = d;
  std::vector<std::string> betas, alphas, others;
  for (int b : d.beta) betas.push_back(d.complex.curve_info(b).name);
  for (int a : d.alpha) alphas.push_back(d.complex.curve_info(a).name);
  for (int c = 0; c < d.complex.num_curves(); ++c)
    if (!std::count(d.beta.begin(), d.beta.end(), c) && !std::count(d.alpha.begin(), d.alpha.end(), c))
      others.push_back(d.complex.curve_info(c).name);
  auto id = [&](const std::string& name) { return cur.complex.find_curve(name); };
  for (const auto& b : betas)
    for (const auto& o : others) cur = reduce_bigons(cur, id(b), id(o), false);
  // Bigons with alpha curves go only while the diagram stays admissible.
  const bool admissible = check_admissibility(cur).admissible;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& b : betas)
      for (const auto& a : alphas)
        for (int face : bigon_faces(cur, id(a), id(b))) {
          auto next = cancel_bigon(cur, face);
          if (admissible && !check_admissibility(next).admissible) continue;
          cur = std::move(next);
          changed = true;
          break;
        }
  }
  return cur;
}

HeegaardDiagram apply_monodromy(const HeegaardDiagram& d, const MonodromyWord& word) {
  HeegaardDiagram cur = d;
  for (const auto& letter : word) {
    const int c = cur.complex.find_curve(letter.curve);
    if (c < 0 || cur.complex.curve_info(c).family != Family::Aux ||
        std::count(cur.beta.begin(), cur.beta.end(), c))
      throw Error(ErrorCode::TwistCurveOutsidePage, "no page curve named '" + letter.curve + "'");
    if (letter.sign != 1 && letter.sign != -1)
      throw Error(ErrorCode::InvalidInput, "twist sign must be +1 or -1");
    cur = dehn_twist(cur, c, -letter.sign, cur.beta);
  }
  return word.empty() ? cur : tidy_beta(cur);
}

long long homology_order(const PageSpec& page, const MonodromyWord& word) {
  page.check();
  const auto names = page_curve_names(page);
  if (page.boundary == 2) {
    long long k = 0;
    for (const auto& l : word) k += l.sign;
    return k < 0 ? -k : k;
  }
  // H_1 of the page with basis a_1, b_1, a_2, ...; <a_k, b_k> = 1 and the
  // chain curve c_k is b_k + a_{k+1}.
  const int m = page.cut_arcs();
  auto page_class = [&](int idx) {
    IntVector v(m, 0);
    if (idx < m) {
      v[idx] = 1;
    } else {
      const int k = idx - m;
      v[2 * k + 1] = 1;
      v[2 * k + 2] = 1;
    }
    return v;
  };
  auto form = [&](const IntVector& u, const IntVector& v) {
    std::int64_t out = 0;
    for (int k = 0; 2 * k + 1 < m; ++k) out += u[2 * k] * v[2 * k + 1] - u[2 * k + 1] * v[2 * k];
    return out;
  };
  IntMatrix phi(m, IntVector(m, 0));
  for (int i = 0; i < m; ++i) phi[i][i] = 1;
  for (const auto& l : word) {
    const auto it = std::find(names.begin(), names.end(), l.curve);
    if (it == names.end()) throw Error(ErrorCode::TwistCurveOutsidePage, "no page curve named '" + l.curve + "'");
    const IntVector c = page_class(static_cast<int>(it - names.begin()));
    // T_c(x) = x + sign <c, x> c on every column
    for (int col = 0; col < m; ++col) {
      IntVector x(m);
      for (int r = 0; r < m; ++r) x[r] = phi[r][col];
      const std::int64_t pair = form(c, x);
      for (int r = 0; r < m; ++r) phi[r][col] += l.sign * pair * c[r];
    }
  }
  for (int i = 0; i < m; ++i) phi[i][i] -= 1;
  return std::llabs(determinant(phi));
}

AdaptedCrossing adapted_crossing(const HeegaardDiagram& d, int delta) {
  const auto& c = d.complex;
  if (delta < 0 || delta >= c.num_curves() || c.curve_info(delta).family != Family::Aux ||
      std::count(d.alpha.begin(), d.alpha.end(), delta) || std::count(d.beta.begin(), d.beta.end(), delta))
    throw Error(ErrorCode::DeltaNotAdapted, "delta must be an aux curve");
  AdaptedCrossing out;
  for (int b : d.beta) {
    const int k = c.intersection_count(delta, b);
    if (k == 0) continue;
    if (k > 1 || out.beta >= 0)
      throw Error(ErrorCode::DeltaNotAdapted, "delta must meet exactly one beta curve exactly once");
    out.beta = b;
  }
  if (out.beta < 0) throw Error(ErrorCode::DeltaNotAdapted, "delta misses every beta curve");
  for (int dart : c.curve_info(out.beta).darts) {
    const int v = c.origin(dart);
    for (int x : c.vertex_darts(v))
      if (c.curve(x) == delta) {
        out.vertex = v;
        out.east = dart;
      }
    if (out.vertex >= 0) break;
  }
  return out;
}

HeegaardDiagram place_knot_basepoints(const HeegaardDiagram& d, int delta) {
  if (d.points.count("w") && d.knot_adapted) return d;
  AdaptedCrossing x;
  try {
    x = adapted_crossing(d, delta);
  } catch (const Error& e) {
    throw Error(ErrorCode::NoAdaptedConfiguration, e.detail());
  }
  const auto& c = d.complex;
  HeegaardDiagram out = d;
  out.points["z"] = c.face(x.east);
  out.points["w"] = c.face(c.sigma(c.sigma(x.east)));
  out.basepoints = {"z", "w"};
  out.knot_adapted = true;
  // Both sectors join one channel after the twist, so swapping z and w
  // reverses the knot only. Take the order that keeps the knot views admissible.
  auto admissible = [&](const HeegaardDiagram& k) {
    HeegaardDiagram ad = k;
    for (int& bc : ad.beta)
      if (bc == x.beta) bc = delta;
    return check_admissibility(k).admissible && check_admissibility(ad).admissible;
  };
  if (!admissible(out)) {
    HeegaardDiagram swapped = out;
    std::swap(swapped.points["z"], swapped.points["w"]);
    if (admissible(swapped)) return swapped;
  }
  return out;
}

DtsTriple build_dts_triple(const HeegaardDiagram& d0, int delta) {
  const HeegaardDiagram d = place_knot_basepoints(d0, delta);
  const auto& c = d.complex;
  const AdaptedCrossing x = adapted_crossing(d, delta);
  const int east = x.east, north = c.sigma(east);

  Surgery s(d);
  auto& b = s.builder();
  // beta_1 copy on the south side, delta copy on the west side
  const auto pb = pushoff_left(b, curve_path(b, x.beta, false), c.curve_info(x.beta).name + "'", Family::Beta, false);
  const auto pd =
      pushoff_left(b, curve_path(b, delta, CellComplex::forward(north)), "~" + c.curve_info(delta).name, Family::Aux, true);
  // the copies cross once, next to the crossing of delta with the beta_1 copy
  int corner = -1;
  for (size_t j = 0; j < pd.path.size(); ++j)
    if (b.curve(b.sigma(pd.path[j])) == pb.curve) corner = static_cast<int>(j);
  if (corner < 0) throw Error(ErrorCode::InvalidComplex, "copies of beta_1 and delta do not cross");
  const int n_dart = pd.darts[corner];  // leaves the corner northwards
  const int star = b.add_anchor(n_dart);                   // north-west corner
  const int starstar = b.add_anchor(b.sigma(b.sigma(n_dart)));  // south-east corner
  b.smooth(n_dart);  // the copy of beta_1 turns left onto the copy of delta

  MapBuilder::Result res;
  HeegaardDiagram m = s.finish(&res);

  auto crosses_alpha = [&](int v) {
    for (int cv : m.complex.vertex_curves(v))
      if (std::find(m.alpha.begin(), m.alpha.end(), cv) != m.alpha.end()) return true;
    return false;
  };
  DtsTriple t;
  t.beta1 = res.curve_remap[x.beta];
  t.delta = res.curve_remap[delta];
  t.beta1p = res.curve_remap[pb.curve];
  for (size_t i = 0; i < pb.path.size(); ++i) {
    const int v = res.vertex_remap[pb.vertices[i]];
    if (v >= 0 && crosses_alpha(v)) {
      // provenance in the original complex, carried to the new one
      t.from_beta[v] = res.vertex_remap[b.origin(pb.path[i])];
    }
  }
  for (size_t j = 0; j < pd.path.size(); ++j) {
    const int v = res.vertex_remap[pd.vertices[j]];
    if (v >= 0 && static_cast<int>(j) != corner && crosses_alpha(v)) t.from_delta[v] = res.vertex_remap[b.origin(pd.path[j])];
  }
  m.points["Dstar"] = m.complex.face(res.anchors[star]);
  m.points["Dstarstar"] = m.complex.face(res.anchors[starstar]);
  m.points["Dz"] = m.points.at("z");
  m.points["Dw"] = m.points.at("w");

  std::vector<int> rest;
  for (int bc : m.beta)
    if (bc != t.beta1) rest.push_back(bc);
  t.ab = m;
  t.ab.beta = {t.beta1};
  t.ab.beta.insert(t.ab.beta.end(), rest.begin(), rest.end());
  t.ad = t.ab;
  t.ad.beta[0] = t.delta;
  t.abp = t.ab;
  t.abp.beta[0] = t.beta1p;
  t.abp.basepoints = {"z"};
  t.abp.knot_adapted = false;
  return t;
}

FramingRecord framing_translate(int n) { return {n, n + 2, n + 1}; }

int framing_inverse(const FramingRecord& r) { return r.page_framing - 2; }

}  // namespace hfdts
