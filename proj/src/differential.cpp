#include "hfdts/differential.hpp"

#include <algorithm>

#include "hfdts/error.hpp"

namespace hfdts {

int coordinate_distance(const Generator& x, const Generator& y) {
  int n = 0;
  for (std::size_t i = 0; i < x.points.size(); ++i)
    if (x.points[i] != y.points[i]) ++n;
  return n;
}

int count_disks(const DiagramView& view, const DomainSystem& sys, const Generator& x, const Generator& y,
                std::vector<IntVector>* disks) {
  const int dist = coordinate_distance(x, y);
  if (dist < 1 || dist > 2) return 0;
  int count = 0;
  for (const auto& m : sys.binary_solutions(sys.rhs(x, y))) {
    bool empty = true;
    for (std::size_t i = 0; i < x.points.size() && empty; ++i) {
      if (x.points[i] != y.points[i]) continue;
      for (int k : view.sector_classes(x.points[i]))
        if (m[k] != 0) empty = false;
    }
    if (!empty) continue;
    Rational mu;
    for (int k = 0; k < view.num_classes(); ++k)
      if (m[k]) mu += view.euler_measure(k);
    for (int v : x.points) mu += point_measure(view, m, v);
    for (int v : y.points) mu += point_measure(view, m, v);
    if (!(mu == Rational(1))) continue;
    ++count;
    if (disks) disks->push_back(m);
  }
  return count;
}

F2Matrix differential_serial(const DiagramView& view, const DomainSystem& sys, const std::vector<Generator>& gens,
                             std::vector<CountedDisk>* disks) {
  const int n = static_cast<int>(gens.size());
  F2Matrix d(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<IntVector> found;
      const int c = count_disks(view, sys, gens[x], gens[y], disks ? &found : nullptr);
      if (c % 2) d.set(y, x, true);
      if (disks)
        for (auto& m : found) disks->push_back({x, y, std::move(m)});
    }
  return d;
}

F2Matrix differential_parallel(const DiagramView& view, const DomainSystem& sys, const std::vector<Generator>& gens,
                               std::vector<CountedDisk>* disks) {
  const int n = static_cast<int>(gens.size());
  std::vector<std::vector<int>> column(n);
  std::vector<std::vector<CountedDisk>> found(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::vector<IntVector> ms;
      const int c = count_disks(view, sys, gens[x], gens[y], disks ? &ms : nullptr);
      if (c % 2) column[x].push_back(y);
      for (auto& m : ms) found[x].push_back({x, y, std::move(m)});
    }
  }
  F2Matrix d(n, n);
  for (int x = 0; x < n; ++x)
    for (int y : column[x]) d.set(y, x, true);
  if (disks)
    for (auto& f : found)
      for (auto& disk : f) disks->push_back(std::move(disk));
  return d;
}

DifferentialResult differential(const HeegaardDiagram& d, const DifferentialOptions& opts) {
  HeegaardDiagram view_diagram = d;
  view_diagram.basepoints = opts.forbidden;
  for (const auto& name : opts.forbidden)
    if (!d.points.count(name)) throw Error(ErrorCode::MissingMarks, "no basepoint named " + name);
  if (opts.check_nice) {
    const auto verdict = is_nice(view_diagram);
    if (!verdict.nice)
      throw Error(ErrorCode::NotNice, std::to_string(verdict.offending_faces.size()) + " region(s) are not bigons or rectangles");
  }
  if (opts.check_admissible && !check_admissibility(view_diagram).admissible)
    throw Error(ErrorCode::NotAdmissible, "a nonzero periodic domain avoiding z has one sign");
  const DiagramView view(view_diagram);
  std::vector<int> forbidden_classes;
  for (const auto& name : opts.forbidden) forbidden_classes.push_back(view.class_of_point(name));
  std::sort(forbidden_classes.begin(), forbidden_classes.end());
  forbidden_classes.erase(std::unique(forbidden_classes.begin(), forbidden_classes.end()), forbidden_classes.end());
  const DomainSystem sys(view, forbidden_classes);
  DifferentialResult out;
  out.generators = enumerate_generators(view);
  auto* disks = opts.record_disks ? &out.disks : nullptr;
  out.matrix = opts.parallel ? differential_parallel(view, sys, out.generators, disks)
                             : differential_serial(view, sys, out.generators, disks);
  return out;
}

}  // namespace hfdts
