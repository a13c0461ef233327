#include "hfdts/surgery.hpp"

#include <algorithm>

#include "hfdts/error.hpp"

namespace hfdts {

Surgery::Surgery(const HeegaardDiagram& d) : d_(&d), b_(d.complex) {
  for (const auto& [name, f] : d.points) {
    names_.push_back(name);
    handles_.push_back(b_.add_anchor(d.complex.face_darts(f).front()));
  }
}

bool Surgery::is_point_face_dart(int dart) const {
  const auto face = b_.face_of(dart);
  for (int h : handles_)
    if (std::find(face.begin(), face.end(), b_.anchor(h)) != face.end()) return true;
  return false;
}

bool Surgery::is_basepoint_face_dart(int dart) const {
  const auto face = b_.face_of(dart);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!d_->basepoints.count(names_[i])) continue;
    if (std::find(face.begin(), face.end(), b_.anchor(handles_[i])) != face.end()) return true;
  }
  return false;
}

HeegaardDiagram Surgery::finish(MapBuilder::Result* result) const {
  auto res = b_.finalize();
  HeegaardDiagram out;
  out.basepoints = d_->basepoints;
  out.knot_adapted = d_->knot_adapted;
  for (int a : d_->alpha) {
    const int c = res.curve_remap.at(a);
    if (c < 0) throw Error(ErrorCode::InvalidComplex, "alpha curve vanished");
    out.alpha.push_back(c);
  }
  for (int bc : d_->beta) {
    const int c = res.curve_remap.at(bc);
    if (c < 0) throw Error(ErrorCode::InvalidComplex, "beta curve vanished");
    out.beta.push_back(c);
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const int dart = res.anchors.at(handles_[i]);
    if (dart < 0) throw Error(ErrorCode::InvalidComplex, "lost region " + names_[i]);
    out.points[names_[i]] = res.complex.face(dart);
  }
  out.complex = res.complex;
  if (result) *result = std::move(res);
  return out;
}

std::vector<int> curve_path(const MapBuilder& b, int curve, bool along) {
  auto ds = b.curve_darts(curve);
  if (along) return ds;
  std::vector<int> out;
  for (auto it = ds.rbegin(); it != ds.rend(); ++it) out.push_back(b.twin(*it));
  return out;
}

Pushoff pushoff_left(MapBuilder& b, const std::vector<int>& path, const std::string& name, Family family,
                     bool scratch) {
  const int k = static_cast<int>(path.size());
  if (k == 0) throw Error(ErrorCode::InvalidInput, "empty pushoff path");
  Pushoff out;
  out.path = path;
  std::vector<int> left(k), near(k);
  for (int i = 0; i < k; ++i) {
    const int d = path[i];
    if (b.sigma(b.sigma(b.sigma(b.sigma(d)))) != d) throw Error(ErrorCode::InvalidComplex, "pushoff through valence != 4");
    left[i] = b.sigma(d);
  }
  for (int i = 0; i < k; ++i) {
    near[i] = b.split_near_origin(left[i]);
    out.vertices.push_back(b.origin(left[i]));
  }
  out.curve = b.add_curve(name, family, scratch);
  for (int i = 0; i < k; ++i) out.darts.push_back(b.new_edge(out.vertices[i], out.vertices[(i + 1) % k], out.curve, true));
  for (int i = 0; i < k; ++i) {
    const int back = b.twin(out.darts[(i - 1 + k) % k]);
    b.set_rotation({out.darts[i], left[i], back, b.twin(near[i])});
  }
  for (int h = 0; h < b.num_anchors(); ++h)
    for (int i = 0; i < k; ++i)
      if (b.anchor(h) == path[i]) b.set_anchor(h, out.darts[i]);
  return out;
}

HeegaardDiagram dehn_twist(const HeegaardDiagram& d, int c, int sign, const std::vector<int>& targets) {
  const auto& cx = d.complex;
  if (c < 0 || c >= cx.num_curves()) throw Error(ErrorCode::NonEmbeddedTwistCurve, "unknown twist curve");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidInput, "twist sign must be +1 or -1");
  std::vector<bool> is_target(cx.num_curves(), false);
  for (int t : targets) {
    if (t < 0 || t >= cx.num_curves()) throw Error(ErrorCode::InvalidInput, "unknown target curve");
    if (t == c) throw Error(ErrorCode::NonEmbeddedTwistCurve, "twist curve is also a target");
    if (cx.curve_info(t).family == Family::Alpha || std::count(d.alpha.begin(), d.alpha.end(), t))
      throw Error(ErrorCode::TargetIsAlpha, "cannot twist alpha curve " + cx.curve_info(t).name);
    is_target[t] = true;
  }
  Surgery s(d);
  auto& b = s.builder();
  const auto path = curve_path(b, c, true);
  int crossings = 0;
  for (int dart : path)
    if (is_target[b.curve(b.sigma(dart))]) ++crossings;
  if (crossings == 0) return d;
  std::vector<Pushoff> copies;
  for (int k = 0; k < crossings; ++k)
    copies.push_back(pushoff_left(b, path, "~twist" + std::to_string(k), Family::Aux, true));
  for (const auto& p : copies)
    for (int f : p.darts) {
      const int a = b.sigma(f);
      const int t = b.curve(a);
      if (t < static_cast<int>(is_target.size()) && is_target[t]) b.smooth(sign > 0 ? a : b.sigma(a));
    }
  return s.finish();
}

namespace {

struct Bigon {
  int e = -1, f = -1;
};

// The bigon face `face` between curves a and b, if it can be cancelled.
std::optional<Bigon> bigon_at(const HeegaardDiagram& d, int face, int a, int b, bool& basepoint_hit) {
  const auto& c = d.complex;
  const auto& ds = c.face_darts(face);
  if (ds.size() != 2) return std::nullopt;
  int e = ds[0], f = ds[1];
  if (c.curve(e) == b && c.curve(f) == a) std::swap(e, f);
  if (c.curve(e) != a || c.curve(f) != b) return std::nullopt;
  const int pu = c.sigma(c.sigma(e));
  const int te = CellComplex::twin(e);
  const int qv = c.sigma(te);
  const int pv = c.sigma(qv);
  const int qu = c.sigma(c.sigma(CellComplex::twin(f)));
  if (CellComplex::twin(pu) == pv || CellComplex::twin(qu) == qv) return std::nullopt;
  if (c.face(pu) == c.face(qv)) return std::nullopt;
  for (const auto& [name, pf] : d.points)
    if (pf == face) {
      basepoint_hit = true;
      return std::nullopt;
    }
  return Bigon{e, f};
}

HeegaardDiagram cancel(const HeegaardDiagram& cur, const Bigon& bigon) {
  const auto& c = cur.complex;
  Surgery s(cur);
  auto& bl = s.builder();
  const int e = bigon.e, f = bigon.f;
  const int te = CellComplex::twin(e), tf = CellComplex::twin(f);
  const int pu = c.sigma(c.sigma(e)), qu = c.sigma(c.sigma(tf));
  const int qv = c.sigma(te), pv = c.sigma(qv);
  std::vector<bool> doomed(bl.num_darts(), false);
  for (int x : {e, te, f, tf, pu, qu, pv, qv}) doomed[x] = true;
  bl.reanchor_off(doomed);
  const int xp = bl.twin(pu), yp = bl.twin(pv), xq = bl.twin(qu), yq = bl.twin(qv);
  for (int x : {e, te, f, tf, pu, qu, pv, qv}) bl.kill(x);
  bl.join(xp, yp);
  bl.join(xq, yq);
  return s.finish();
}

}  // namespace

std::vector<int> bigon_faces(const HeegaardDiagram& d, int a, int b) {
  std::vector<int> out;
  bool hit = false;
  for (int face = 0; face < d.complex.num_faces(); ++face)
    if (bigon_at(d, face, a, b, hit)) out.push_back(face);
  return out;
}

HeegaardDiagram cancel_bigon(const HeegaardDiagram& d, int face) {
  const auto& ds = d.complex.face_darts(face);
  if (ds.size() != 2) throw Error(ErrorCode::InvalidInput, "not a bigon face");
  bool hit = false;
  const auto bigon = bigon_at(d, face, d.complex.curve(ds[0]), d.complex.curve(ds[1]), hit);
  if (!bigon) throw Error(hit ? ErrorCode::BasepointInBigon : ErrorCode::InvalidInput, "bigon cannot be cancelled");
  return cancel(d, *bigon);
}

HeegaardDiagram reduce_bigons(const HeegaardDiagram& d, int a, int b, bool strict) {
  if (a == b) throw Error(ErrorCode::InvalidInput, "bigon reduction needs two distinct curves");
  HeegaardDiagram cur = d;
  for (;;) {
    bool basepoint_hit = false;
    std::optional<Bigon> bigon;
    for (int face = 0; face < cur.complex.num_faces() && !bigon; ++face) bigon = bigon_at(cur, face, a, b, basepoint_hit);
    if (!bigon) {
      if (basepoint_hit && strict) throw Error(ErrorCode::BasepointInBigon, "a remaining bigon holds a marked region");
      return cur;
    }
    cur = cancel(cur, *bigon);
  }
}

int finger_move_builder(Surgery& s, int e, const std::vector<int>& path, const FingerOptions& opts) {
  auto& b = s.builder();
  int cur = e;
  for (int f : path) {
    if (f < 0 || f >= b.num_darts() || !b.alive(f)) throw Error(ErrorCode::InvalidFingerMove, "unknown arc");
    const auto face = b.face_of(cur);
    if (std::find(face.begin(), face.end(), f) == face.end())
      throw Error(ErrorCode::InvalidFingerMove, "opposite arc does not bound the region");
    const int t = b.curve(cur), x = b.curve(f);
    if (t == x) throw Error(ErrorCode::InvalidFingerMove, "finger would cross its own curve");
    if (b.curve_info(t).family == b.curve_info(x).family && b.curve_info(t).family != Family::Aux)
      throw Error(ErrorCode::InvalidFingerMove, "finger would cross a curve of the same family");
    if (opts.forbid_basepoint_crossing && s.is_basepoint_face_dart(cur))
      throw Error(ErrorCode::CrossesBasepointRegion, "finger passes through a basepoint region");
    const bool tf_fwd = b.dart(cur).forward, xf_fwd = b.dart(f).forward;
    const int te = b.twin(cur), tf = b.twin(f);
    const int mp = b.new_vertex(), mq = b.new_vertex();
    // Finger legs and tip along t.
    const int e1b = b.new_edge(mp, b.origin(cur), t, !tf_fwd);
    const int e2 = b.new_edge(mp, mq, t, tf_fwd);
    const int e3 = b.new_edge(mq, b.origin(te), t, tf_fwd);
    // Subdivided arc of f: S -> mQ -> mP -> T.
    const int f1b = b.new_edge(mq, b.origin(f), x, !xf_fwd);
    const int f2 = b.new_edge(mq, mp, x, xf_fwd);
    const int f3 = b.new_edge(mp, b.origin(tf), x, xf_fwd);
    // Reattach the old darts to the new pieces.
    b.kill(b.twin(e1b));
    b.kill(b.twin(e3));
    b.kill(b.twin(f1b));
    b.kill(b.twin(f3));
    b.join(cur, e1b);
    b.join(te, e3);
    b.join(f, f1b);
    b.join(tf, f3);
    b.set_rotation({f3, e1b, b.twin(f2), e2});
    b.set_rotation({f2, e3, f1b, b.twin(e2)});
    cur = e2;
  }
  return cur;
}

HeegaardDiagram finger_move(const HeegaardDiagram& d, int e, const std::vector<int>& path, const FingerOptions& opts) {
  if (path.empty()) throw Error(ErrorCode::InvalidFingerMove, "empty finger path");
  Surgery s(d);
  finger_move_builder(s, e, path, opts);
  return s.finish();
}

HeegaardDiagram remove_curve(const HeegaardDiagram& d, int c) {
  if (std::count(d.alpha.begin(), d.alpha.end(), c) || std::count(d.beta.begin(), d.beta.end(), c))
    throw Error(ErrorCode::InvalidInput, "only transparent curves can be removed");
  Surgery s(d);
  auto& b = s.builder();
  std::vector<bool> doomed(b.num_darts(), false);
  for (int x = 0; x < b.num_darts(); ++x)
    if (b.alive(x) && b.curve(x) == c) doomed[x] = true;
  b.reanchor_off(doomed);
  for (int x = 0; x < b.num_darts(); ++x)
    if (doomed[x]) b.detach(x);
  return s.finish();
}

}  // namespace hfdts
