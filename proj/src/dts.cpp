#include "hfdts/dts.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hfdts/floer.hpp"

namespace hfdts {

namespace {

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), name + ": " + e.detail());
  }
}

std::string word_string(const MonodromyWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += l.curve + (l.sign > 0 ? "+" : "-");
  }
  return s;
}

ChainComplexF2 complex_of(const std::vector<Generator>& gens, const F2Matrix& d) {
  std::vector<std::string> labels;
  for (const auto& g : gens) labels.push_back(generator_label(g));
  return ChainComplexF2(std::move(labels), d);
}

RankPair ranks_of(const InducedMap& m) { return {m.kernel_rank, m.image_rank}; }

}  // namespace

GeneratorSplit split_generators(const DtsTriple& t, const std::vector<Generator>& abp, const std::vector<Generator>& ab,
                                const std::vector<Generator>& ad) {
  for (const char* mark : {"Dstar", "Dstarstar", "Dz", "Dw"})
    if (!t.abp.points.count(mark)) throw Error(ErrorCode::MissingMarks, std::string("no mark ") + mark);
  std::map<Generator, int> ab_index, ad_index;
  for (std::size_t i = 0; i < ab.size(); ++i) ab_index[ab[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < ad.size(); ++i) ad_index[ad[i]] = static_cast<int>(i);

  const auto& c = t.abp.complex;
  GeneratorSplit out;
  for (const auto& g : abp) {
    int slot = -1;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
      const auto cs = c.vertex_curves(g.points[i]);
      if (cs[0] == t.beta1p || cs[1] == t.beta1p) slot = static_cast<int>(i);
    }
    if (slot < 0) throw Error(ErrorCode::MissingMarks, "generator " + generator_label(g) + " misses beta_1'");
    const int v = g.points[slot];
    Generator h = g;
    if (auto it = t.from_beta.find(v); it != t.from_beta.end()) {
      h.points[slot] = it->second;
      auto found = ab_index.find(h);
      if (found == ab_index.end()) throw Error(ErrorCode::MissingMarks, "no alpha-beta generator for " + generator_label(g));
      out.side.push_back(0);
      out.index.push_back(found->second);
      ++out.num_ab;
    } else if (auto jt = t.from_delta.find(v); jt != t.from_delta.end()) {
      h.points[slot] = jt->second;
      auto found = ad_index.find(h);
      if (found == ad_index.end())
        throw Error(ErrorCode::MissingMarks, "no alpha-delta generator for " + generator_label(g));
      out.side.push_back(1);
      out.index.push_back(found->second);
      ++out.num_ad;
    } else {
      throw Error(ErrorCode::MissingMarks, "vertex " + std::to_string(v) + " of beta_1' has no origin");
    }
  }
  if (out.num_ab != static_cast<int>(ab.size()) || out.num_ad != static_cast<int>(ad.size()))
    throw Error(ErrorCode::SplittingViolated, "generator counts do not split as |ab| + |ad|");
  return out;
}

DtsBlocks extract_blocks(const F2Matrix& d, const GeneratorSplit& split) {
  DtsBlocks b{F2Matrix(split.num_ab, split.num_ab), F2Matrix(split.num_ad, split.num_ad),
              F2Matrix(split.num_ab, split.num_ad), F2Matrix(split.num_ad, split.num_ab)};
  for (const auto& [y, x] : d.entries()) {
    const int ry = split.index[y], cx = split.index[x];
    switch (2 * split.side[y] + split.side[x]) {
      case 0: b.d_ab.set(ry, cx, true); break;
      case 1: b.f.set(ry, cx, true); break;
      case 2: b.lower_left.set(ry, cx, true); break;
      default: b.d_ad.set(ry, cx, true); break;
    }
  }
  if (!b.lower_left.is_zero())
    throw Error(ErrorCode::SplittingViolated,
                std::to_string(b.lower_left.entries().size()) + " disks from alpha-beta to alpha-delta generators");
  return b;
}

RankPair kernel_image_ranks(const InducedMap& f_star, const InducedMap& connecting) {
  if (f_star.kernel_rank != connecting.kernel_rank || f_star.image_rank != connecting.image_rank)
    throw Error(ErrorCode::ConsistencyFailure,
                "f_* has ranks (" + std::to_string(f_star.kernel_rank) + ", " + std::to_string(f_star.image_rank) +
                    "), the connecting map (" + std::to_string(connecting.kernel_rank) + ", " +
                    std::to_string(connecting.image_rank) + ")");
  return ranks_of(f_star);
}

std::vector<NicifyView> dts_views(const HeegaardDiagram& d, int delta) {
  const auto& c = d.complex;
  const AdaptedCrossing x = adapted_crossing(d, delta);
  const std::string b1 = c.curve_info(x.beta).name, dn = c.curve_info(delta).name;
  NicifyView ab{{b1}, {"z", "w"}}, ad{{dn}, {"z", "w"}}, joint{{b1, dn}, {"z", "w"}};
  for (int bc : d.beta) {
    if (bc == x.beta) continue;
    const std::string& r = c.curve_info(bc).name;
    ab.beta.push_back(r);
    ad.beta.push_back(r);
    joint.beta.push_back(r);
  }
  return {ab, ad, joint};
}

PreparedTriple prepare_triple(const HeegaardDiagram& d0, int delta, const NicifyOptions& base) {
  const HeegaardDiagram d = place_knot_basepoints(d0, delta);
  NicifyOptions opts = base;
  opts.views = dts_views(d, delta);
  PreparedTriple out;
  out.nicify = nicify(d, opts);
  out.triple = build_dts_triple(out.nicify.diagram, out.nicify.diagram.complex.find_curve(d.complex.curve_info(delta).name));
  return out;
}

DtsReport run_dts(const DtsInput& in) {
  DtsReport r;
  r.open_book = in.open_book;
  r.framing = framing_translate(in.open_book.framing);

  const HeegaardDiagram m0 = stage("open book", [&] {
    in.open_book.page.check();
    return apply_monodromy(build_identity_diagram(in.open_book.page), in.open_book.monodromy);
  });
  const int delta = stage("basepoints", [&] {
    if (!in.open_book.delta) throw Error(ErrorCode::NoAdaptedConfiguration, "no knot curve given");
    const int c = m0.complex.find_curve(*in.open_book.delta);
    if (c < 0) throw Error(ErrorCode::TwistCurveOutsidePage, "unknown page curve " + *in.open_book.delta);
    return c;
  });
  const HeegaardDiagram m = stage("basepoints", [&] { return place_knot_basepoints(m0, delta); });

  NicifyOptions nopts;
  nopts.max_steps = in.max_nicify_steps;
  nopts.seed = in.seed;
  nopts.parallel = in.parallel;
  const PreparedTriple prep = stage("nicify", [&] { return prepare_triple(m, delta, nopts); });
  const DtsTriple& t = prep.triple;
  r.nicify_steps = static_cast<int>(prep.nicify.audit.size());
  r.nicify_explored = prep.nicify.explored;
  r.initial_badness = prep.nicify.initial_badness;
  r.nicify_audit = prep.nicify.audit;
  r.beta1 = t.ab.complex.curve_info(t.beta1).name;
  r.delta = t.ab.complex.curve_info(t.delta).name;

  const HeegaardDiagram* views[3] = {&t.ab, &t.abp, &t.ad};
  for (int k = 0; k < 3; ++k) {
    r.nice[k] = is_nice(*views[k]).nice;
    r.admissible[k] = check_admissibility(*views[k]).admissible;
  }

  DifferentialOptions knot_opts;
  knot_opts.forbidden = {"z", "w"};
  knot_opts.parallel = in.parallel;
  DifferentialOptions twisted_opts;
  twisted_opts.forbidden = {"z"};
  twisted_opts.parallel = in.parallel;
  twisted_opts.record_disks = true;
  const auto dab = stage("differential D_ab", [&] { return differential(t.ab, knot_opts); });
  const auto dad = stage("differential D_ad", [&] { return differential(t.ad, knot_opts); });
  const auto dabp = stage("differential D_ab'", [&] { return differential(t.abp, twisted_opts); });
  r.generators[0] = static_cast<int>(dab.generators.size());
  r.generators[1] = static_cast<int>(dabp.generators.size());
  r.generators[2] = static_cast<int>(dad.generators.size());

  const GeneratorSplit split =
      stage("blocks", [&] { return split_generators(t, dabp.generators, dab.generators, dad.generators); });
  const DtsBlocks blocks = stage("blocks", [&] { return extract_blocks(dabp.matrix, split); });
  r.lower_left_zero = blocks.lower_left.is_zero();
  r.d_ab_matches = blocks.d_ab == dab.matrix;
  r.d_ad_matches = blocks.d_ad == dad.matrix;

  const DiagramView pv(t.abp);
  const int w_cls = pv.class_of_point("Dw"), s1 = pv.class_of_point("Dstar"), s2 = pv.class_of_point("Dstarstar");
  r.diagonal_nw_zero = true;
  r.f_disks_marked = true;
  for (const auto& disk : dabp.disks) {
    const int sx = split.side[disk.x], sy = split.side[disk.y];
    if (sx == sy && disk.coeffs[w_cls] != 0) r.diagonal_nw_zero = false;
    if (sx == 1 && sy == 0) {
      ++r.f_disks;
      if (disk.coeffs[s1] == 0 && disk.coeffs[s2] == 0) r.f_disks_marked = false;
    }
  }

  stage("homology", [&] {
    const ChainComplexF2 cab = complex_of(dab.generators, dab.matrix);
    const ChainComplexF2 cad = complex_of(dad.generators, dad.matrix);
    const ChainComplexF2 cabp = complex_of(dabp.generators, dabp.matrix);
    const ChainMapF2 f(cad, cab, blocks.f);
    r.hfk_y = homology_rank(cab);
    r.hfk_y0 = homology_rank(cad);
    r.hf_y_minus = homology_rank(cabp);
    r.cone_rank = homology_rank(mapping_cone(f));
    if (r.cone_rank != r.hf_y_minus)
      throw Error(ErrorCode::ConsistencyFailure, "cone of f has rank " + std::to_string(r.cone_rank) + ", D_ab' has " +
                                                     std::to_string(r.hf_y_minus));
    const auto incl = cone_inclusion(f), proj = cone_projection(f);
    const InducedMap fs = induced_map(f), g1 = induced_map(incl), g2 = induced_map(proj);
    const InducedMap conn = connecting_morphism(incl, proj);
    r.f_star = kernel_image_ranks(fs, conn);
    r.connecting = ranks_of(conn);
    r.gamma1 = ranks_of(g1);
    r.gamma2 = ranks_of(g2);

    TriangleRanks tr;
    const int h[3] = {r.hfk_y, r.cone_rank, r.hfk_y0};
    const InducedMap* maps[3] = {&g1, &g2, &fs};
    for (int k = 0; k < 3; ++k) {
      tr.homology[k] = h[k];
      tr.map_kernel[k] = maps[k]->kernel_rank;
      tr.map_image[k] = maps[k]->image_rank;
    }
    r.exactness = exactness_check(tr);
    r.parity = (h[1] - h[0] - h[2]) % 2 == 0;
    r.bounds = std::abs(h[0] - h[2]) <= h[1] && h[1] <= h[0] + h[2];
    return 0;
  });
  return r;
}

Json report_to_json(const DtsReport& r) {
  Json j;
  j["page"] = {{"genus", r.open_book.page.genus}, {"boundary", r.open_book.page.boundary}};
  j["monodromy"] = word_string(r.open_book.monodromy);
  j["delta"] = r.delta;
  j["beta1"] = r.beta1;
  j["framing"] = {{"surgery", r.framing.surgery_framing},
                  {"page", r.framing.page_framing},
                  {"pushoff", r.framing.pushoff_framing}};
  Json audit = Json::array();
  for (const auto& s : r.nicify_audit) audit.push_back({{"curve", s.curve}, {"crossed", s.crossed}, {"badness", s.badness}});
  j["nicify"] = {{"steps", r.nicify_steps},
                 {"explored", r.nicify_explored},
                 {"initial_badness", r.initial_badness},
                 {"audit", audit}};
  const char* names[3] = {"D_ab", "D_ab'", "D_ad"};
  Json diagrams;
  for (int k = 0; k < 3; ++k)
    diagrams[names[k]] = {{"generators", r.generators[k]}, {"nice", r.nice[k]}, {"admissible", r.admissible[k]}};
  j["diagrams"] = diagrams;
  j["ranks"] = {{"HFK(Y,K)", r.hfk_y}, {"HF(Y_-1(K))", r.hf_y_minus}, {"HFK(Y_0(K),mu)", r.hfk_y0}, {"cone(f)", r.cone_rank}};
  j["blocks"] = {{"lower_left_zero", r.lower_left_zero},
                 {"d_ab_matches", r.d_ab_matches},
                 {"d_ad_matches", r.d_ad_matches},
                 {"diagonal_n_w_zero", r.diagonal_nw_zero},
                 {"f_disks", r.f_disks},
                 {"f_disks_marked", r.f_disks_marked}};
  auto pair = [](const RankPair& p) { return Json{{"kernel", p.kernel}, {"image", p.image}}; };
  j["maps"] = {{"Gamma_1", pair(r.gamma1)},
               {"Gamma_2", pair(r.gamma2)},
               {"f_*", pair(r.f_star)},
               {"connecting", pair(r.connecting)}};
  j["exactness"] = {{"at", {r.exactness.exact_at[0], r.exactness.exact_at[1], r.exactness.exact_at[2]}},
                    {"rank_nullity",
                     {r.exactness.rank_nullity[0], r.exactness.rank_nullity[1], r.exactness.rank_nullity[2]}},
                    {"parity", r.parity},
                    {"bounds", r.bounds}};
  j["F_hat"] = {{"kernel", r.f_star.kernel}, {"image", r.f_star.image}, {"via", "f_*"}};
  j["statement"] = "ker(F_hat) and im(F_hat) have ranks " + std::to_string(r.f_star.kernel) + " and " +
                   std::to_string(r.f_star.image) + ", via f_*";
  j["exact"] = r.exact();
  return j;
}

std::string report_to_text(const DtsReport& r) {
  std::ostringstream o;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  o << "page: genus " << r.open_book.page.genus << ", boundary " << r.open_book.page.boundary << "\n";
  o << "monodromy: " << (r.open_book.monodromy.empty() ? "(identity)" : word_string(r.open_book.monodromy)) << "\n";
  o << "knot: " << r.delta << " (meets " << r.beta1 << " once)\n";
  o << "framing: surgery " << r.framing.surgery_framing << ", page " << r.framing.page_framing << ", pushoff "
    << r.framing.pushoff_framing << "\n";
  o << "nicify: " << r.nicify_steps << " finger moves (" << r.nicify_explored << " tried), badness "
    << r.initial_badness << " -> 0\n";
  const char* names[3] = {"D_ab ", "D_ab'", "D_ad "};
  for (int k = 0; k < 3; ++k)
    o << names[k] << ": " << r.generators[k] << " generators, nice " << yes(r.nice[k]) << ", admissible "
      << yes(r.admissible[k]) << "\n";
  o << "HFK(Y,K)        rank " << r.hfk_y << "\n";
  o << "HF(Y_-1(K))     rank " << r.hf_y_minus << " (cone of f: " << r.cone_rank << ")\n";
  o << "HFK(Y_0(K),mu)  rank " << r.hfk_y0 << "\n";
  o << "blocks: lower-left zero " << yes(r.lower_left_zero) << ", D_ab block matches " << yes(r.d_ab_matches)
    << ", D_ad block matches " << yes(r.d_ad_matches) << "\n";
  o << "disks: n_w = 0 on diagonal blocks " << yes(r.diagonal_nw_zero) << ", " << r.f_disks
    << " f-disks all meet D_* or D_** " << yes(r.f_disks_marked) << "\n";
  auto line = [&](const char* n, const RankPair& p) {
    o << n << ": kernel " << p.kernel << ", image " << p.image << "\n";
  };
  line("Gamma_1   ", r.gamma1);
  line("Gamma_2   ", r.gamma2);
  line("f_*       ", r.f_star);
  line("connecting", r.connecting);
  o << "exact: " << yes(r.exact()) << " (parity " << yes(r.parity) << ", bounds " << yes(r.bounds) << ")\n";
  o << "ker(F_hat) rank " << r.f_star.kernel << ", im(F_hat) rank " << r.f_star.image << ", via f_*\n";
  return o.str();
}

}  // namespace hfdts
