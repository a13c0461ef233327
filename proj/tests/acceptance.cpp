// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hfdts/differential.hpp"
#include "hfdts/dts.hpp"
#include "hfdts/error.hpp"
#include "hfdts/grid.hpp"
#include "hfdts/homology.hpp"
#include "hfdts/nicify.hpp"
#include "hfdts/open_book.hpp"
#include "torus_fixture.hpp"

using namespace hfdts;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Named {
  std::string name;
  HeegaardDiagram diagram;
};

std::string word_name(const MonodromyWord& w) {
  if (w.empty()) return "id";
  std::string s;
  for (const auto& l : w) s += l.curve + (l.sign > 0 ? "+" : "-");
  return s;
}

std::vector<MonodromyWord> torus_words(int max_len) {
  const MonodromyLetter letters[4] = {{"a", 1}, {"a", -1}, {"b", 1}, {"b", -1}};
  std::vector<MonodromyWord> out{{}};
  std::vector<MonodromyWord> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<MonodromyWord> next;
    for (const auto& w : layer)
      for (const auto& l : letters) {
        auto v = w;
        v.push_back(l);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

HeegaardDiagram open_book(const PageSpec& page, const MonodromyWord& w) {
  return apply_monodromy(build_identity_diagram(page), w);
}

// Hat complex with basepoint z, nicified first when needed.
DifferentialResult hat_complex(HeegaardDiagram d, std::uint64_t seed, int* steps = nullptr) {
  d.basepoints = {"z"};
  if (steps) *steps = 0;
  if (!is_nice(d).nice) {
    NicifyOptions o;
    o.seed = seed;
    auto r = nicify(d, o);
    if (steps) *steps = static_cast<int>(r.audit.size());
    d = r.diagram;
  }
  return differential(d);
}

int hat_rank(const DifferentialResult& r) {
  return static_cast<int>(r.generators.size()) - 2 * rank(r.matrix);
}

struct DtsCase {
  std::string name;
  OpenBookSpec ob;
};

std::vector<DtsCase> dts_cases() {
  std::vector<DtsCase> out;
  for (int k = -3; k <= 5; ++k) {
    OpenBookSpec ob;
    ob.page = {0, 2};
    for (int i = 0; i < std::abs(k); ++i) ob.monodromy.push_back({"c", k > 0 ? 1 : -1});
    ob.delta = "c";
    out.push_back({"annulus c^" + std::to_string(k), ob});
  }
  for (const auto& w : torus_words(3)) {
    const auto d = open_book({1, 1}, w);
    for (const char* delta : {"a", "b"}) {
      try {
        adapted_crossing(d, d.complex.find_curve(delta));
      } catch (const Error&) {
        continue;
      }
      OpenBookSpec ob;
      ob.page = {1, 1};
      ob.monodromy = w;
      ob.delta = delta;
      out.push_back({"torus " + word_name(w) + " delta " + delta, ob});
    }
  }
  return out;
}

struct DtsRun {
  std::string name;
  OpenBookSpec ob;
  bool ok = false;
  std::string error;
  DtsReport report;
};

std::vector<DtsRun> run_all(const std::vector<DtsCase>& cases, std::uint64_t seed) {
  std::vector<DtsRun> out;
  for (const auto& c : cases) {
    DtsRun r{c.name, c.ob, false, "", {}};
    try {
      DtsInput in;
      in.open_book = c.ob;
      in.seed = seed;
      r.report = run_dts(in);
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

F2Matrix elementary(int n, int i, int j) {
  F2Matrix e = F2Matrix::identity(n);
  e.set(i, j, true);
  return e;
}

struct RandomPair {
  ChainComplexF2 a, b;
  F2Matrix f;
};

// Complexes in standard form, a chain map plus a null-homotopic term, then scrambled bases.
RandomPair random_chain_map(std::mt19937_64& rng) {
  auto coin = [&] { return (rng() & 1) != 0; };
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto standard = [&](int n, int pairs) {
    F2Matrix d(n, n);
    for (int p = 0; p < pairs; ++p) d.set(2 * p + 1, 2 * p, true);  // e_2p -> e_2p+1
    return d;
  };
  const int na = pick(1, 12), nb = pick(1, 12);
  const int pa = pick(0, na / 2), pb = pick(0, nb / 2);
  F2Matrix da = standard(na, pa), db = standard(nb, pb);

  // cycles of B: images e_2p+1 and free generators
  std::vector<int> cycles_b;
  for (int p = 0; p < pb; ++p) cycles_b.push_back(2 * p + 1);
  for (int k = 2 * pb; k < nb; ++k) cycles_b.push_back(k);
  F2Matrix f(nb, na);
  auto random_cycle = [&](int col) {
    for (int k : cycles_b)
      if (coin()) f.flip(k, col);
  };
  for (int p = 0; p < pa; ++p) {
    for (int r = 0; r < nb; ++r)
      if (coin()) f.set(r, 2 * p, true);
    const auto image = db.apply(f.column(2 * p));
    for (int r = 0; r < nb; ++r) f.set(r, 2 * p + 1, image[r]);
  }
  for (int k = 2 * pa; k < na; ++k) random_cycle(k);
  F2Matrix h(nb, na);
  for (int r = 0; r < nb; ++r)
    for (int c = 0; c < na; ++c) h.set(r, c, coin());
  f = f + db * h + h * da;

  for (int s = 0; s < 3 * na; ++s) {
    const int i = pick(0, na - 1), j = pick(0, na - 1);
    if (i == j) continue;
    const F2Matrix e = elementary(na, i, j);
    da = e * da * e;
    f = f * e;
  }
  for (int s = 0; s < 3 * nb; ++s) {
    const int i = pick(0, nb - 1), j = pick(0, nb - 1);
    if (i == j) continue;
    const F2Matrix e = elementary(nb, i, j);
    db = e * db * e;
    f = e * f;
  }
  auto labels = [](int n) {
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i) l.push_back("g" + std::to_string(i));
    return l;
  };
  return {ChainComplexF2(labels(na), da), ChainComplexF2(labels(nb), db), f};
}

void report(const char* id, const Verdict& v, const std::string& summary, int& failures) {
  std::printf("%s %s  %s\n", id, v.pass ? "PASS" : "FAIL", v.pass ? summary.c_str() : v.detail.c_str());
  if (!v.pass) ++failures;
}

}  // namespace

int main() {
  int failures = 0;

  std::vector<Named> closed;
  closed.push_back({"torus S3", fixture::lens_diagram(1, 0)});
  for (int p = 2; p <= 7; ++p) closed.push_back({"lens " + std::to_string(p), fixture::lens_diagram(p, 1)});
  for (int k = 0; k <= 5; ++k) {
    MonodromyWord w(k, MonodromyLetter{"c", 1});
    closed.push_back({"annulus c^" + std::to_string(k), open_book({0, 2}, w)});
  }
  for (const auto& w : torus_words(3)) closed.push_back({"torus page " + word_name(w), open_book({1, 1}, w)});

  // A1
  {
    Verdict v;
    for (const auto& c : closed) {
      try {
        const auto r = hat_complex(c.diagram, 0);
        if (!(r.matrix * r.matrix).is_zero()) v.fail(c.name + ": d^2 != 0");
      } catch (const std::exception& e) {
        v.fail(c.name + ": " + e.what());
      }
    }
    report("A1", v, "d^2 = 0 on " + std::to_string(closed.size()) + " diagrams", failures);
  }

  // A2
  {
    Verdict v;
    auto expect = [&](const std::string& name, const HeegaardDiagram& d, int want) {
      try {
        const int got = hat_rank(hat_complex(d, 0));
        if (got != want) v.fail(name + ": rank " + std::to_string(got) + ", expected " + std::to_string(want));
      } catch (const std::exception& e) {
        v.fail(name + ": " + e.what());
      }
    };
    expect("torus S3", fixture::lens_diagram(1, 0), 1);
    for (int p = 2; p <= 7; ++p) expect("lens " + std::to_string(p), fixture::lens_diagram(p, 1), p);
    expect("genus-2 identity", open_book({1, 1}, {}), 4);
    report("A2", v, "S3 rank 1, lens p rank p (p = 2..7), genus-2 identity rank 4", failures);
  }

  // A3
  {
    Verdict v;
    try {
      const int got = hat_rank(hat_complex(open_book({1, 1}, {{"a", 1}, {"b", 1}}), 0));
      if (got != 1) v.fail("torus page a+b+: rank " + std::to_string(got) + ", expected 1");
    } catch (const std::exception& e) {
      v.fail(std::string("torus page a+b+: ") + e.what());
    }
    report("A3", v, "torus page a+b+ has rank 1", failures);
  }

  const auto cases = dts_cases();
  const auto runs = run_all(cases, 0);
  auto for_each_run = [&](Verdict& v, const std::function<void(const DtsRun&)>& f) {
    for (const auto& r : runs) {
      if (!r.ok) {
        v.fail(r.name + ": " + r.error);
        continue;
      }
      f(r);
    }
  };
  const std::string count = std::to_string(cases.size()) + " twist sequences";

  // A4
  {
    Verdict v;
    for_each_run(v, [&](const DtsRun& r) {
      const auto& t = r.report;
      if (!t.lower_left_zero) v.fail(r.name + ": lower-left block not zero");
      if (!t.d_ab_matches) v.fail(r.name + ": D_ab block differs");
      if (!t.d_ad_matches) v.fail(r.name + ": D_ad block differs");
      if (!t.diagonal_nw_zero) v.fail(r.name + ": diagonal disk with n_w != 0");
      if (!t.f_disks_marked) v.fail(r.name + ": f-disk missing D_* and D_**");
    });
    report("A4", v, "block structure on " + count, failures);
  }

  // A5
  {
    Verdict v;
    for_each_run(v, [&](const DtsRun& r) {
      if (r.report.cone_rank != r.report.hf_y_minus)
        v.fail(r.name + ": cone rank " + std::to_string(r.report.cone_rank) + " vs " +
               std::to_string(r.report.hf_y_minus));
    });
    report("A5", v, "rank cone(f) = rank D_ab' on " + count, failures);
  }

  // A6
  {
    Verdict v;
    for_each_run(v, [&](const DtsRun& r) {
      if (!r.report.exact()) v.fail(r.name + ": not exact");
      if (!r.report.parity) v.fail(r.name + ": parity fails");
    });
    report("A6", v, "exact at all three nodes, parity holds on " + count, failures);
  }

  // A7
  {
    Verdict v;
    for_each_run(v, [&](const DtsRun& r) {
      if (r.report.f_star.kernel != r.report.connecting.kernel || r.report.f_star.image != r.report.connecting.image)
        v.fail(r.name + ": f_* and connecting ranks differ");
    });
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 50; ++i) {
      try {
        const auto p = random_chain_map(rng);
        const ChainMapF2 f(p.a, p.b, p.f);
        const auto incl = cone_inclusion(f), proj = cone_projection(f);
        kernel_image_ranks(induced_map(f), connecting_morphism(incl, proj));
      } catch (const std::exception& e) {
        v.fail("random instance " + std::to_string(i) + ": " + e.what());
      }
    }
    report("A7", v, "f_* and connecting ranks agree on " + count + " and 50 random chain maps", failures);
  }

  // A8
  {
    Verdict v;
    int checked = 0, moves = 0;
    auto audit_path = [&](const std::string& name, const HeegaardDiagram& input, const std::vector<NicifyView>& views,
                          const NicifyResult& res) {
      const bool valid_input = check_diagram(input).empty();
      for (std::size_t s = 0; s < res.path.size(); ++s) {
        const auto& step = res.path[s];
        const std::string at = name + " step " + std::to_string(s + 1);
        if (!validate(step.complex.to_raw()).ok()) v.fail(at + ": complex invalid");
        if (valid_input && !check_diagram(step).empty()) v.fail(at + ": diagram became invalid");
        for (const auto& view : views)
          if (check_admissibility(view_diagram(input, view)).admissible &&
              !check_admissibility(view_diagram(step, view)).admissible)
            v.fail(at + ": view lost admissibility");
        ++moves;
      }
    };
    for (const auto& c : closed) {
      HeegaardDiagram d = c.diagram;
      d.basepoints = {"z"};
      if (is_nice(d).nice) continue;
      try {
        int s0 = 0, s1 = 0;
        const int r0 = hat_rank(hat_complex(d, 0, &s0)), r1 = hat_rank(hat_complex(d, 1, &s1));
        if (r0 != r1) v.fail(c.name + ": seeds give ranks " + std::to_string(r0) + " and " + std::to_string(r1));
        const auto res = nicify(d, {});
        audit_path(c.name, d, {NicifyView{[&] {
                                              std::vector<std::string> b;
                                              for (int x : d.beta) b.push_back(d.complex.curve_info(x).name);
                                              return b;
                                            }(),
                                            {"z"}}},
                   res);
        ++checked;
      } catch (const std::exception& e) {
        v.fail(c.name + ": " + e.what());
      }
    }
    const auto reseeded = run_all(cases, 1);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const auto& a = runs[i];
      const auto& b = reseeded[i];
      if (!a.ok || a.report.nicify_steps == 0) continue;
      if (!b.ok) {
        v.fail(b.name + " (seed 1): " + b.error);
        continue;
      }
      const auto& x = a.report;
      const auto& y = b.report;
      if (x.hfk_y != y.hfk_y || x.hf_y_minus != y.hf_y_minus || x.hfk_y0 != y.hfk_y0 ||
          x.f_star.kernel != y.f_star.kernel || x.f_star.image != y.f_star.image)
        v.fail(a.name + ": ranks depend on the seed");
      try {
        const auto m = open_book(a.ob.page, a.ob.monodromy);
        const int delta = m.complex.find_curve(*a.ob.delta);
        const auto knot = place_knot_basepoints(m, delta);
        const auto prep = prepare_triple(knot, delta, {});
        audit_path(a.name, knot, dts_views(knot, delta), prep.nicify);
      } catch (const std::exception& e) {
        v.fail(a.name + ": " + e.what());
      }
      ++checked;
    }
    report("A8", v,
           "seed-independent ranks on " + std::to_string(checked) + " non-nice diagrams, " + std::to_string(moves) +
               " finger moves keep validity and admissibility",
           failures);
  }

  // A9
  {
    Verdict v;
    struct G {
      std::string name, text;
      int want;
    };
    const std::vector<G> grids = {{"unknot", "n:2 X:[1,0] O:[0,1]", 2},
                                  {"trefoil", "n:5 X:[2,3,4,0,1] O:[0,1,2,3,4]", 48},
                                  {"figure-eight", "n:6 X:[3,2,4,5,1,0] O:[1,5,0,3,4,2]", 160},
                                  {"T(2,5)", "n:7 X:[2,3,4,5,6,0,1] O:[0,1,2,3,4,5,6]", 320}};
    double slowest6 = 0;
    for (const auto& g : grids) {
      try {
        const auto gd = grid_parse(g.text);
        const auto t0 = std::chrono::steady_clock::now();
        const int r = grid_tilde_rank(gd).rank;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (gd.n == 6) slowest6 = std::max(slowest6, secs);
        if (r != g.want) v.fail(g.name + ": rank " + std::to_string(r) + ", expected " + std::to_string(g.want));
        if (r % (1 << (gd.n - 1)) != 0) v.fail(g.name + ": rank not divisible by 2^(n-1)");
        for (int k = 1; k < gd.n; ++k)
          if (grid_tilde_rank(gd.rotated(k)).rank != r) v.fail(g.name + ": rank changes under column rotation");
      } catch (const std::exception& e) {
        v.fail(g.name + ": " + e.what());
      }
    }
    if (slowest6 > 10.0) v.fail("n = 6 took " + std::to_string(slowest6) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", slowest6);
    report("A9", v, std::string("unknot 2, trefoil 48, figure-eight 160 (") + buf + " s), divisibility, rotation",
           failures);
  }

  // A10
  {
    Verdict v;
    for (const auto& c : cases) {
      try {
        DtsInput in;
        in.open_book = c.ob;
        const std::string first = report_to_json(run_dts(in)).dump(2);
        const std::string again = report_to_json(run_dts(in)).dump(2);
        in.parallel = false;
        const std::string serial = report_to_json(run_dts(in)).dump(2);
        if (first != again) v.fail(c.name + ": reports differ between runs");
        if (first != serial) v.fail(c.name + ": serial and parallel reports differ");
      } catch (const std::exception& e) {
        v.fail(c.name + ": " + e.what());
      }
    }
    report("A10", v, "byte-identical reports on " + count + " (repeat and serial)", failures);
  }

  std::printf("%s\n", failures == 0 ? "all criteria pass" : (std::to_string(failures) + " criteria fail").c_str());
  return failures == 0 ? 0 : 1;
}
