#include "hfdts/nicify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "hfdts/floer.hpp"
#include "hfdts/surgery.hpp"

namespace hfdts {

namespace {

constexpr int kDirectedPerDart = 8;
constexpr int kDirectedLength = 16;

struct Candidate {
  int e = -1;
  std::vector<int> path;
  std::uint64_t key = 0;
  bool valid = false;
  bool directed = false;
  Grade grade;
  HeegaardDiagram result;
};

std::vector<NicifyView> default_views(const HeegaardDiagram& d, const NicifyOptions& opts) {
  if (!opts.views.empty()) return opts.views;
  NicifyView v;
  for (int c : d.beta) v.beta.push_back(d.complex.curve_info(c).name);
  v.basepoints = d.basepoints;
  return {v};
}

/// Relabeling-invariant code of the map with its curves and named faces.
std::vector<int> canonical_code(const HeegaardDiagram& d) {
  const auto& c = d.complex;
  const int n = c.num_darts();
  std::vector<int> point_mask(c.num_faces(), 0);
  int bit = 1;
  for (const auto& [name, f] : d.points) {
    point_mask[f] |= bit;
    bit <<= 1;
  }
  std::vector<int> best;
  std::vector<int> label(n), order;
  for (int start = 0; start < n; start += 2) {
    if (c.curve(start) != c.curve(0)) continue;
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    label[start] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int nb : {CellComplex::twin(order[i]), c.sigma(order[i])}) {
        if (label[nb] >= 0) continue;
        label[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
    std::vector<int> code;
    code.reserve(4 * n);
    for (int x : order) {
      code.push_back(label[CellComplex::twin(x)]);
      code.push_back(label[c.sigma(x)]);
      code.push_back(2 * c.curve(x) + (CellComplex::forward(x) ? 1 : 0));
      code.push_back(point_mask[c.face(x)]);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

HeegaardDiagram view_diagram(const HeegaardDiagram& d, const NicifyView& v) {
  HeegaardDiagram out = d;
  out.beta.clear();
  for (const auto& name : v.beta) {
    const int c = d.complex.find_curve(name);
    if (c < 0) throw Error(ErrorCode::InvalidInput, "unknown curve " + name);
    out.beta.push_back(c);
  }
  out.basepoints = v.basepoints;
  for (const auto& p : v.basepoints)
    if (!d.points.count(p)) throw Error(ErrorCode::InvalidInput, "missing basepoint " + p);
  return out;
}

int total_badness(const HeegaardDiagram& d, const std::vector<NicifyView>& views) {
  int sum = 0;
  for (const auto& v : views) {
    const auto vd = view_diagram(d, v);
    sum += DiagramView(vd).badness();
  }
  return sum;
}

namespace {

/// Distance of each class from the basepoint classes, in alpha arcs crossed;
/// -1 when unreachable.
std::vector<int> class_distances(const DiagramView& dv) {
  const auto& c = dv.diagram().complex;
  std::vector<std::vector<int>> adj(dv.num_classes());
  for (int k = 0; k < c.num_arcs(); ++k) {
    if (dv.alpha_index(c.curve(2 * k)) < 0) continue;
    const int a = dv.class_of_face(c.face(2 * k)), b = dv.class_of_face(c.face(2 * k + 1));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> dist(dv.num_classes(), -1);
  std::deque<int> q;
  for (int k : dv.basepoint_classes()) {
    dist[k] = 0;
    q.push_back(k);
  }
  while (!q.empty()) {
    const int k = q.front();
    q.pop_front();
    for (int n : adj[k])
      if (dist[n] < 0) {
        dist[n] = dist[k] + 1;
        q.push_back(n);
      }
  }
  return dist;
}

}  // namespace

Grade graded_badness(const HeegaardDiagram& d, const std::vector<NicifyView>& views) {
  Grade g;
  for (const auto& v : views) {
    const auto vd = view_diagram(d, v);
    const DiagramView dv(vd);
    const auto dist = class_distances(dv);
    for (int k : dv.bad_classes()) {
      const int at = dist[k] < 0 ? dv.num_classes() : dist[k];
      if (static_cast<int>(g.size()) <= at) g.resize(at + 1, 0);
      g[at] += dv.class_badness(k);
    }
  }
  while (!g.empty() && g.back() == 0) g.pop_back();
  return g;
}

bool grade_less(const Grade& a, const Grade& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

int grade_total(const Grade& g) { return std::accumulate(g.begin(), g.end(), 0); }

namespace {

class Search {
 public:
  Search(const HeegaardDiagram& input, const NicifyOptions& opts)
      : input_(input), opts_(opts), views_(default_views(input, opts)), rng_(opts.seed) {}

  NicifyResult run() {
    HeegaardDiagram d = input_;
    for (const auto& v : views_)
      for (const auto& p : v.basepoints) d.basepoints.insert(p);
    for (const auto& v : views_) keep_admissible_.push_back(check_admissibility(view_diagram(d, v)).admissible);
    const Grade bad = graded_badness(d, views_);
    best_ = {d, {}, bad};
    std::vector<FingerStep> audit;
    if (!descend(d, bad, audit))
      throw fail("no finger move sequence lowers the badness below " +
                 std::to_string(grade_total(best_.grade)));
    NicifyResult res;
    res.diagram = std::move(found_);
    res.diagram.basepoints = input_.basepoints;
    res.audit = std::move(audit);
    res.path = std::move(path_);
    for (auto& step : res.path) step.basepoints = input_.basepoints;
    res.initial_badness = grade_total(bad);
    res.explored = steps_;
    return res;
  }

 private:
  struct Best {
    HeegaardDiagram diagram;
    std::vector<FingerStep> audit;
    Grade grade;
  };

  NicifyError fail(const std::string& what) const {
    HeegaardDiagram out = best_.diagram;
    out.basepoints = input_.basepoints;
    return NicifyError(what, std::move(out), best_.audit, grade_total(best_.grade));
  }

  bool descend(const HeegaardDiagram& d, const Grade& bad, std::vector<FingerStep>& audit) {
    if (grade_less(bad, best_.grade)) best_ = {d, audit, bad};
    if (bad.empty()) {
      found_ = d;
      return true;
    }
    if (!visited_.insert(canonical_code(d)).second) return false;
    {
      auto cands = improving(d, bad);
      for (Candidate* cd : cands.second) {
        bool ok = true;
        for (std::size_t v = 0; v < views_.size() && ok; ++v)
          if (keep_admissible_[v]) ok = check_admissibility(view_diagram(cd->result, views_[v])).admissible;
        if (!ok) continue;
        if (steps_ >= opts_.max_steps)
          throw fail("no nice diagram within " + std::to_string(opts_.max_steps) + " finger moves");
        ++steps_;
        const auto& c = d.complex;
        FingerStep st;
        st.curve = c.curve_info(c.curve(cd->e)).name;
        for (int f : cd->path) st.crossed.push_back(c.curve_info(c.curve(f)).name);
        st.badness = grade_total(cd->grade);
        audit.push_back(st);
        path_.push_back(cd->result);
        if (descend(cd->result, cd->grade, audit)) return true;
        audit.pop_back();
        path_.pop_back();
      }
    }
    return false;
  }

  /// Finger moves that lower the graded badness, best first.
  std::pair<std::vector<Candidate>, std::vector<Candidate*>> improving(const HeegaardDiagram& d, const Grade& bad) {
    const auto& c = d.complex;
    std::vector<bool> movable(c.num_curves(), false), crossable(c.num_curves(), false);
    for (const auto& v : views_)
      for (const auto& name : v.beta) movable[c.find_curve(name)] = true;
    for (int k = 0; k < c.num_curves(); ++k) crossable[k] = !movable[k] && c.curve_info(k).family != Family::Beta;

    std::vector<bool> bad_face(c.num_faces(), false);
    for (const auto& v : views_) {
      const auto vd = view_diagram(d, v);
      DiagramView dv(vd);
      for (int cls : dv.bad_classes())
        for (int f : dv.faces_of_class(cls)) bad_face[f] = true;
    }
    const auto bp_faces = d.basepoint_faces();
    std::vector<bool> is_bp(c.num_faces(), false);
    for (int f : bp_faces) is_bp[f] = true;

    std::vector<Candidate> cands;
    for (int e = 0; e < c.num_darts(); ++e) {
      if (!movable[c.curve(e)] || !bad_face[c.face(e)] || is_bp[c.face(e)]) continue;
      std::vector<int> path;
      auto extend = [&](auto&& self, int face) -> void {
        if (!path.empty()) cands.push_back({e, path, rng_(), false, false, {}, {}});
        if (static_cast<int>(path.size()) == opts_.max_hops) return;
        if (!path.empty() && is_bp[face]) return;
        for (int f : c.face_darts(face)) {
          if (!crossable[c.curve(f)]) continue;
          const int next = c.face(CellComplex::twin(f));
          if (!path.empty() && f == CellComplex::twin(path.back())) continue;
          path.push_back(f);
          self(self, next);
          path.pop_back();
        }
      };
      extend(extend, c.face(e));
    }

    // Fingers from a bad class straight down to a basepoint class, each alpha
    // crossing one step closer.
    for (const auto& v : views_) {
      const auto vd = view_diagram(d, v);
      const DiagramView dv(vd);
      const auto dist = class_distances(dv);
      for (int cls : dv.bad_classes()) {
        if (dist[cls] <= 0) continue;
        for (int f0 : dv.faces_of_class(cls))
          for (int e : c.face_darts(f0)) {
            if (!movable[c.curve(e)] || dv.beta_index(c.curve(e)) < 0) continue;
            std::vector<int> path, seen{f0};
            int found = 0;
            auto walk = [&](auto&& self, int face) -> void {
              if (found >= kDirectedPerDart || static_cast<int>(path.size()) >= kDirectedLength) return;
              const int here = dist[dv.class_of_face(face)];
              for (int x : c.face_darts(face)) {
                if (!crossable[c.curve(x)] || found >= kDirectedPerDart) continue;
                const int next = c.face(CellComplex::twin(x));
                const bool real = dv.alpha_index(c.curve(x)) >= 0;
                const int there = dist[dv.class_of_face(next)];
                if (real ? there != here - 1 : std::find(seen.begin(), seen.end(), next) != seen.end()) continue;
                path.push_back(x);
                if (real && there == 0) {
                  cands.push_back({e, path, rng_(), false, true, {}, {}});
                  ++found;
                } else {
                  const auto saved = seen;
                  if (real) seen.clear();
                  seen.push_back(next);
                  self(self, next);
                  seen = saved;
                }
                path.pop_back();
              }
            };
            walk(walk, f0);
          }
      }
    }

#pragma omp parallel for schedule(dynamic) if (opts_.parallel)
    for (std::size_t i = 0; i < cands.size(); ++i) {
      try {
        auto moved = finger_move(d, cands[i].e, cands[i].path);
        cands[i].grade = graded_badness(moved, views_);
        cands[i].valid = grade_less(cands[i].grade, bad);
        if (cands[i].valid) cands[i].result = std::move(moved);
      } catch (const Error&) {
        cands[i].valid = false;
      }
    }

    std::pair<std::vector<Candidate>, std::vector<Candidate*>> out;
    out.first = std::move(cands);
    for (auto& cd : out.first)
      if (cd.valid) out.second.push_back(&cd);
    std::sort(out.second.begin(), out.second.end(), [](const Candidate* a, const Candidate* b) {
      if (a->directed != b->directed) return a->directed;
      if (grade_less(a->grade, b->grade)) return true;
      if (grade_less(b->grade, a->grade)) return false;
      if (a->path.size() != b->path.size()) return a->path.size() < b->path.size();
      return a->key < b->key;
    });
    return out;
  }

  const HeegaardDiagram& input_;
  const NicifyOptions& opts_;
  std::vector<NicifyView> views_;
  std::mt19937_64 rng_;
  std::vector<bool> keep_admissible_;
  int steps_ = 0;
  std::set<std::vector<int>> visited_;
  Best best_;
  HeegaardDiagram found_;
  std::vector<HeegaardDiagram> path_;
};

}  // namespace

NicifyResult nicify(const HeegaardDiagram& d, const NicifyOptions& opts) { return Search(d, opts).run(); }

}  // namespace hfdts
