#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hfdts/differential.hpp"
#include "hfdts/dts.hpp"
#include "hfdts/error.hpp"
#include "hfdts/grid.hpp"
#include "hfdts/io.hpp"
#include "hfdts/nicify.hpp"
#include "hfdts/open_book.hpp"
#include "hfdts/surgery.hpp"

using namespace hfdts;

namespace {

constexpr int kOk = 0;
constexpr int kVerdict = 1;
constexpr int kInput = 2;

struct Flags {
  int max_nicify_steps = 10000;
  std::string report = "json";
  std::uint64_t seed = 0;
  bool serial = false;
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::InvalidComplex:
    case ErrorCode::NonEmbeddedTwistCurve:
    case ErrorCode::TargetIsAlpha:
    case ErrorCode::UnsupportedPage:
    case ErrorCode::TwistCurveOutsidePage:
    case ErrorCode::NoAdaptedConfiguration:
    case ErrorCode::DeltaNotAdapted:
    case ErrorCode::MissingMarks:
    case ErrorCode::InvalidGrid:
      return true;
    default:
      return false;
  }
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const Json& j, const Flags& f) {
  if (f.report == "text")
    flatten(j, "", std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

bool is_open_book(const Json& j) { return j.is_object() && j.contains("page"); }

HeegaardDiagram build_open_book(const OpenBookSpec& ob) {
  ob.page.check();
  HeegaardDiagram d = apply_monodromy(build_identity_diagram(ob.page), ob.monodromy);
  if (ob.delta) {
    const int c = d.complex.find_curve(*ob.delta);
    if (c < 0) throw Error(ErrorCode::TwistCurveOutsidePage, "unknown page curve " + *ob.delta);
    d = place_knot_basepoints(d, c);
  }
  return d;
}

// A diagram document, or an open book turned into its diagram.
HeegaardDiagram load_diagram(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return is_open_book(j) ? build_open_book(open_book_from_json(j)) : diagram_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

NicifyOptions nicify_options(const Flags& f) {
  NicifyOptions o;
  o.max_steps = f.max_nicify_steps;
  o.seed = f.seed;
  o.parallel = !f.serial;
  return o;
}

Json audit_json(const std::vector<FingerStep>& audit) {
  Json a = Json::array();
  for (const auto& s : audit) a.push_back({{"curve", s.curve}, {"crossed", s.crossed}, {"badness", s.badness}});
  return a;
}

// Rank of the hat complex with the given basepoints, nicifying first when needed.
Json floer_rank(HeegaardDiagram d, const std::set<std::string>& basepoints, const Flags& f) {
  d.basepoints = basepoints;
  int steps = 0;
  if (!is_nice(d).nice) {
    const auto r = nicify(d, nicify_options(f));
    steps = static_cast<int>(r.audit.size());
    d = r.diagram;
  }
  DifferentialOptions opts;
  opts.forbidden = basepoints;
  opts.parallel = !f.serial;
  const auto r = differential(d, opts);
  const int gens = static_cast<int>(r.generators.size());
  return Json{{"rank", gens - 2 * rank(r.matrix)}, {"generators", gens}, {"nicify_steps", steps}};
}

int cmd_build_ob(const std::string& path, const Flags& f) {
  const Json j = read_json_file(path);
  const auto d = build_open_book(open_book_from_json(j));
  if (f.report == "text") {
    std::cout << "genus: " << d.genus() << "\nvertices: " << d.complex.num_vertices()
              << "\nregions: " << d.complex.num_faces() << "\nknot: " << (d.has_w() ? "yes" : "no") << "\n";
  } else {
    std::cout << diagram_to_json(d).dump(2) << "\n";
  }
  return kOk;
}

int cmd_twist(const std::string& path, const std::string& curve, int sign, bool reduce, const Flags& f) {
  const auto d = load_diagram(path);
  const int c = d.complex.find_curve(curve);
  if (c < 0) throw Error(ErrorCode::TwistCurveOutsidePage, "unknown curve " + curve);
  auto out = dehn_twist(d, c, sign, d.beta);
  if (reduce) out = tidy_beta(out);
  emit(diagram_to_json(out), f);
  return kOk;
}

int cmd_nicify(const std::string& path, const Flags& f) {
  const auto d = load_diagram(path);
  try {
    const auto r = nicify(d, nicify_options(f));
    emit(Json{{"nice", true},
              {"steps", r.audit.size()},
              {"explored", r.explored},
              {"initial_badness", r.initial_badness},
              {"audit", audit_json(r.audit)},
              {"diagram", diagram_to_json(r.diagram)}},
         f);
    return kOk;
  } catch (const NicifyError& e) {
    emit(Json{{"nice", false},
              {"error", e.what()},
              {"steps", e.audit().size()},
              {"badness", e.badness()},
              {"audit", audit_json(e.audit())},
              {"diagram", diagram_to_json(e.diagram())}},
         f);
    return kVerdict;
  }
}

int cmd_check(const std::string& path, const Flags& f) {
  const Json j = read_json_file(path);
  if (is_open_book(j)) {
    load_diagram(path);
    emit(Json{{"valid", true}, {"violations", Json::array()}}, f);
    return kOk;
  }
  const RawComplex raw = raw_of_diagram_json(j);
  const auto diag = validate(raw);
  if (!diag.ok()) {
    emit(Json{{"valid", false}, {"violations", diag.violations}}, f);
    return kVerdict;
  }
  const auto d = diagram_from_json(j);
  const auto problems = check_diagram(d);
  const auto nice = is_nice(d);
  const auto adm = check_admissibility(d);
  std::vector<int> regions;
  for (int face : nice.offending_faces) regions.push_back(face + 1);
  emit(Json{{"valid", problems.empty()},
            {"violations", problems},
            {"nice", nice.nice},
            {"offending_regions", regions},
            {"admissible", adm.admissible},
            {"periodic_lattice_rank", adm.lattice_rank}},
       f);
  return problems.empty() ? kOk : kVerdict;
}

int cmd_hfhat(const std::string& path, const Flags& f) {
  emit(floer_rank(load_diagram(path), {"z"}, f), f);
  return kOk;
}

int cmd_hfk(const std::string& path, const Flags& f) {
  const auto d = load_diagram(path);
  if (!d.points.count("w")) throw Error(ErrorCode::InvalidInput, path + ": knot Floer homology needs basepoint w");
  emit(floer_rank(d, {"z", "w"}, f), f);
  return kOk;
}

int cmd_dts(const std::string& path, std::optional<int> framing, const Flags& f) {
  DtsInput in;
  const Json j = read_json_file(path);
  try {
    in.open_book = open_book_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
  if (framing) in.open_book.framing = *framing;
  in.max_nicify_steps = f.max_nicify_steps;
  in.seed = f.seed;
  in.parallel = !f.serial;
  const DtsReport r = run_dts(in);
  if (f.report == "text")
    std::cout << report_to_text(r);
  else
    std::cout << report_to_json(r).dump(2) << "\n";
  return r.exact() ? kOk : kVerdict;
}

int cmd_grid(const std::string& source, const Flags& f) {
  std::string text = source;
  if (std::ifstream in(source); in) {
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  const GridDiagram g = grid_parse(text);
  const auto r = grid_tilde_rank(g, !f.serial);
  emit(Json{{"n", g.n},
            {"components", g.components()},
            {"generators", r.generators},
            {"rank", r.rank},
            {"rank_over_stabilization", r.rank >> (g.n - 1)}},
       f);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hat Heegaard Floer ranks and Dehn twist sequences from open books"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--max-nicify-steps", flags.max_nicify_steps, "finger move budget")->check(CLI::PositiveNumber);
  app.add_option("--report", flags.report, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", flags.seed, "nicify tie-break seed");
  app.add_flag("--serial", flags.serial, "run kernels single-threaded");

  std::string path, curve;
  int sign = 1;
  bool reduce = false;
  std::optional<int> framing;

  auto* build_ob = app.add_subcommand("build-ob", "diagram of an open book");
  build_ob->add_option("file", path, "open book document")->required();
  auto* twist = app.add_subcommand("twist", "Dehn twist of the beta curves along a curve");
  twist->add_option("file", path, "diagram or open book")->required();
  twist->add_option("--curve", curve, "twist curve")->required();
  twist->add_option("--sign", sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  twist->add_flag("--reduce", reduce, "cancel bigons afterwards");
  auto* nic = app.add_subcommand("nicify", "finger moves until the diagram is nice");
  nic->add_option("file", path, "diagram or open book")->required();
  auto* check = app.add_subcommand("check", "validate a diagram");
  check->add_option("file", path, "diagram or open book")->required();
  auto* hfhat = app.add_subcommand("hfhat", "rank of the hat Floer homology");
  hfhat->add_option("file", path, "diagram or open book")->required();
  auto* hfk = app.add_subcommand("hfk", "rank of the hat knot Floer homology");
  hfk->add_option("file", path, "doubly pointed diagram or open book with delta")->required();
  auto* dts = app.add_subcommand("dts", "Dehn twist sequence report");
  dts->add_option("file", path, "open book with delta")->required();
  dts->add_option("--framing", framing, "surgery framing n");
  auto* grid = app.add_subcommand("grid", "tilde grid homology rank");
  grid->add_option("grid", path, "grid file or inline text such as 'n:2 X:[1,0] O:[0,1]'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*build_ob) return cmd_build_ob(path, flags);
    if (*twist) return cmd_twist(path, curve, sign, reduce, flags);
    if (*nic) return cmd_nicify(path, flags);
    if (*check) return cmd_check(path, flags);
    if (*hfhat) return cmd_hfhat(path, flags);
    if (*hfk) return cmd_hfk(path, flags);
    if (*dts) return cmd_dts(path, framing, flags);
    if (*grid) return cmd_grid(path, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kInput : kVerdict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
