#pragma once

// Straight-line curve systems on the square torus, built from coordinates.
// Used as an independent source of complexes for the combinatorial code.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "hfdts/diagram.hpp"

namespace fixture {

struct Line {
  std::string name;
  hfdts::Family family;
  int p, q;      // homology class
  double ox, oy;  // base point
};

inline hfdts::CellComplex torus_complex(const std::vector<Line>& lines) {
  struct Hit {
    double t;
    int vertex;
  };
  const int n = static_cast<int>(lines.size());
  std::vector<std::vector<Hit>> hits(n);
  int nv = 0;
  std::vector<std::array<int, 2>> vcurves;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = lines[i];
      const auto& b = lines[j];
      const double det = -a.p * b.q + b.p * a.q;
      if (det == 0) continue;
      std::vector<std::pair<double, double>> sols;
      const int range = std::abs(a.p) + std::abs(a.q) + std::abs(b.p) + std::abs(b.q) + 2;
      for (int m = -range; m <= range; ++m)
        for (int k = -range; k <= range; ++k) {
          const double rx = b.ox - a.ox + m, ry = b.oy - a.oy + k;
          const double t = (-rx * b.q + b.p * ry) / det;
          const double s = (a.p * ry - a.q * rx) / det;
          if (t < -1e-12 || t >= 1 - 1e-12 || s < -1e-12 || s >= 1 - 1e-12) continue;
          bool dup = false;
          for (auto& [t0, s0] : sols)
            if (std::abs(t0 - t) < 1e-9 && std::abs(s0 - s) < 1e-9) dup = true;
          if (!dup) sols.emplace_back(t, s);
        }
      for (auto [t, s] : sols) {
        hits[i].push_back({t, nv});
        hits[j].push_back({s, nv});
        vcurves.push_back({i, j});
        ++nv;
      }
    }
  // arcs: curve i, k-th arc from hit k to hit k+1
  std::vector<int> origin, curve;
  std::vector<std::vector<int>> arc_id(n);
  int arcs = 0;
  for (int i = 0; i < n; ++i) {
    std::sort(hits[i].begin(), hits[i].end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });
    const int k = static_cast<int>(hits[i].size());
    for (int a = 0; a < k; ++a) {
      arc_id[i].push_back(arcs++);
      origin.push_back(hits[i][a].vertex);
      origin.push_back(hits[i][(a + 1) % k].vertex);
      curve.push_back(i);
      curve.push_back(i);
    }
  }
  std::vector<int> sigma(origin.size(), -1);
  // out/in darts of each curve at each vertex
  std::map<std::pair<int, int>, std::pair<int, int>> at;  // (vertex, curve) -> (out, in)
  for (int i = 0; i < n; ++i) {
    const int k = static_cast<int>(hits[i].size());
    for (int a = 0; a < k; ++a) {
      const int out = 2 * arc_id[i][a];
      const int in = 2 * arc_id[i][(a - 1 + k) % k] + 1;
      at[{hits[i][a].vertex, i}] = {out, in};
    }
  }
  for (int v = 0; v < nv; ++v) {
    const int i = vcurves[v][0], j = vcurves[v][1];
    const auto [oi, ii] = at[{v, i}];
    const auto [oj, ij] = at[{v, j}];
    const double cross = lines[i].p * lines[j].q - lines[i].q * lines[j].p;
    const std::array<int, 4> ccw = cross > 0 ? std::array<int, 4>{oi, oj, ii, ij} : std::array<int, 4>{oi, ij, ii, oj};
    for (int a = 0; a < 4; ++a) sigma[ccw[a]] = ccw[(a + 1) % 4];
  }
  std::vector<std::pair<std::string, hfdts::Family>> names;
  for (const auto& l : lines) names.emplace_back(l.name, l.family);
  return hfdts::CellComplex::from_rotation(1, origin, sigma, curve, names);
}

inline hfdts::HeegaardDiagram torus_diagram(const std::vector<Line>& lines) {
  hfdts::HeegaardDiagram d;
  d.complex = torus_complex(lines);
  for (int c = 0; c < d.complex.num_curves(); ++c) {
    if (d.complex.curve_info(c).family == hfdts::Family::Alpha) d.alpha.push_back(c);
    if (d.complex.curve_info(c).family == hfdts::Family::Beta) d.beta.push_back(c);
  }
  d.points["z"] = 0;
  return d;
}

// Lens space diagram: alpha of class (1,0), beta of class (q,p).
inline hfdts::HeegaardDiagram lens_diagram(int p, int q) {
  return torus_diagram({{"a1", hfdts::Family::Alpha, 1, 0, 0.0, 0.137},
                        {"b1", hfdts::Family::Beta, q, p, 0.0731, 0.0}});
}

}  // namespace fixture
