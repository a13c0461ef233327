// Serial vs OpenMP timings of the counting kernels.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hfdts/differential.hpp"
#include "hfdts/dts.hpp"
#include "hfdts/grid.hpp"
#include "hfdts/open_book.hpp"

using namespace hfdts;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-34s %10.4f %10.4f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              agree ? "same" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial s", "omp s", "speedup");

  for (const char* word : {"a+a+a+", "a+b+"}) {
    MonodromyWord w;
    for (const char* p = word; *p; p += 2) w.push_back({std::string(1, p[0]), p[1] == '+' ? 1 : -1});
    const auto m = apply_monodromy(build_identity_diagram({1, 1}), w);
    const int delta = m.complex.find_curve("a");
    const auto prep = prepare_triple(place_knot_basepoints(m, delta), delta, {});
    DifferentialOptions opts;
    opts.check_admissible = false;
    DifferentialResult s, p;
    const double ts = seconds([&] { opts.parallel = false; s = differential(prep.triple.abp, opts); }, reps);
    const double tp = seconds([&] { opts.parallel = true; p = differential(prep.triple.abp, opts); }, reps);
    row(std::string("D_ab' differential, ") + word + " (" + std::to_string(s.generators.size()) + " gens)", ts, tp,
        s.matrix == p.matrix);
  }

  for (const char* text : {"n:6 X:[3,2,4,5,1,0] O:[1,5,0,3,4,2]", "n:7 X:[2,3,4,5,6,0,1] O:[0,1,2,3,4,5,6]"}) {
    const auto g = grid_parse(text);
    F2Matrix s, p;
    const double ts = seconds([&] { s = grid_differential_serial(g); }, reps);
    const double tp = seconds([&] { p = grid_differential(g); }, reps);
    row("grid differential n=" + std::to_string(g.n), ts, tp, s == p);
  }

  {
    OpenBookSpec ob;
    ob.page = {1, 1};
    ob.monodromy = {{"a", 1}, {"a", 1}, {"a", 1}};
    ob.delta = "a";
    DtsInput in;
    in.open_book = ob;
    std::string s, p;
    const double ts = seconds([&] { in.parallel = false; s = report_to_json(run_dts(in)).dump(); }, reps);
    const double tp = seconds([&] { in.parallel = true; p = report_to_json(run_dts(in)).dump(); }, reps);
    row("full twist sequence a+a+a+", ts, tp, s == p);
  }
  return 0;
}
