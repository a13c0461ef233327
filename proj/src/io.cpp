#include "hfdts/io.hpp"

#include <fstream>
#include <sstream>

#include "hfdts/error.hpp"

namespace hfdts {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' has the wrong type");
  }
}

std::string id_string(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorCode::InvalidInput, "curve id must be a string or integer");
}

}  // namespace

Json raw_to_json(const RawComplex& raw) {
  Json j;
  j["genus"] = raw.genus;
  j["vertices"] = raw.vertices;
  j["curves"] = Json::array();
  for (const auto& c : raw.curves) j["curves"].push_back({{"id", c.id}, {"family", family_name(c.family)}, {"arcs", c.arcs}});
  j["arcs"] = Json::array();
  for (const auto& a : raw.arcs)
    j["arcs"].push_back({{"id", a.id}, {"curve", a.curve}, {"endpoints", {a.from, a.to}}});
  j["regions"] = Json::array();
  for (const auto& r : raw.regions) j["regions"].push_back({{"id", r.id}, {"boundary", r.boundary}});
  return j;
}

RawComplex raw_from_json(const Json& j) {
  RawComplex raw;
  raw.genus = field<int>(j, "genus");
  raw.vertices = field<std::vector<int>>(j, "vertices");
  for (const auto& c : field<Json>(j, "curves")) {
    RawComplex::Curve rc;
    rc.id = id_string(field<Json>(c, "id"));
    rc.family = parse_family(field<std::string>(c, "family"));
    rc.arcs = field<std::vector<int>>(c, "arcs");
    raw.curves.push_back(std::move(rc));
  }
  for (const auto& a : field<Json>(j, "arcs")) {
    RawComplex::Arc ra;
    ra.id = field<int>(a, "id");
    ra.curve = id_string(field<Json>(a, "curve"));
    const auto ends = field<std::vector<int>>(a, "endpoints");
    if (ends.size() != 2) throw Error(ErrorCode::InvalidInput, "arc " + std::to_string(ra.id) + " needs two endpoints");
    ra.from = ends[0];
    ra.to = ends[1];
    raw.arcs.push_back(std::move(ra));
  }
  for (const auto& r : field<Json>(j, "regions")) {
    RawComplex::Region rr;
    rr.id = field<int>(r, "id");
    rr.boundary = field<std::vector<int>>(r, "boundary");
    raw.regions.push_back(std::move(rr));
  }
  return raw;
}

Json diagram_to_json(const HeegaardDiagram& d) {
  Json j = raw_to_json(d.complex.to_raw());
  Json bp;
  bp["z"] = d.z() + 1;
  if (d.has_w()) bp["w"] = *d.w() + 1;
  j["basepoints"] = bp;
  Json marks = Json::object();
  for (const auto& [name, f] : d.points)
    if (name != "z" && name != "w") marks[name] = f + 1;
  if (!marks.empty()) j["marks"] = marks;
  j["alpha"] = Json::array();
  for (int a : d.alpha) j["alpha"].push_back(d.complex.curve_info(a).name);
  j["beta"] = Json::array();
  for (int b : d.beta) j["beta"].push_back(d.complex.curve_info(b).name);
  if (d.knot_adapted) j["knot_adapted"] = true;
  return j;
}

RawComplex raw_of_diagram_json(const Json& j) { return raw_from_json(j); }

HeegaardDiagram diagram_from_json(const Json& j) {
  const auto raw = raw_from_json(j);
  HeegaardDiagram d;
  d.complex = CellComplex::from_raw(raw);
  // Region ids in the document map to face indices through the boundary words.
  std::map<int, int> region_face;
  {
    std::map<int, int> arc_index;
    for (std::size_t k = 0; k < raw.arcs.size(); ++k) arc_index[raw.arcs[k].id] = static_cast<int>(k);
    for (const auto& r : raw.regions) {
      const int ref = r.boundary.front();
      const int dart = 2 * arc_index.at(std::abs(ref)) + (ref < 0 ? 1 : 0);
      region_face[r.id] = d.complex.face(dart);
    }
  }
  auto region = [&](const Json& v, const std::string& what) {
    if (!v.is_number_integer()) throw Error(ErrorCode::InvalidInput, what + " must be a region id");
    auto it = region_face.find(v.get<int>());
    if (it == region_face.end()) throw Error(ErrorCode::InvalidInput, what + " names unknown region");
    return it->second;
  };
  const auto bp = field<Json>(j, "basepoints");
  d.points["z"] = region(field<Json>(bp, "z"), "basepoint z");
  d.basepoints = {"z"};
  if (bp.contains("w")) {
    d.points["w"] = region(bp.at("w"), "basepoint w");
    d.basepoints.insert("w");
  }
  if (j.contains("marks"))
    for (const auto& [name, v] : j.at("marks").items()) d.points[name] = region(v, "mark " + name);
  auto curve_list = [&](const char* key, Family fam) {
    std::vector<int> out;
    if (j.contains(key)) {
      for (const auto& v : j.at(key)) {
        const int c = d.complex.find_curve(id_string(v));
        if (c < 0) throw Error(ErrorCode::InvalidInput, std::string(key) + " lists unknown curve " + id_string(v));
        out.push_back(c);
      }
    } else {
      for (int c = 0; c < d.complex.num_curves(); ++c)
        if (d.complex.curve_info(c).family == fam) out.push_back(c);
    }
    return out;
  };
  d.alpha = curve_list("alpha", Family::Alpha);
  d.beta = curve_list("beta", Family::Beta);
  d.knot_adapted = j.value("knot_adapted", false);
  return d;
}

Json matrix_to_json(const F2Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = Json::array();
  for (const auto& [r, c] : m.entries()) j["entries"].push_back({r, c});
  return j;
}

F2Matrix matrix_from_json(const Json& j) {
  const int rows = field<int>(j, "rows");
  const int cols = field<int>(j, "cols");
  if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidInput, "negative matrix dimension");
  std::vector<std::pair<int, int>> entries;
  for (const auto& e : field<Json>(j, "entries")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidInput, "matrix entry must be [row, col]");
    entries.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return F2Matrix::from_entries(rows, cols, entries);
}

Json open_book_to_json(const OpenBookSpec& ob) {
  Json j;
  j["page"] = {{"genus", ob.page.genus}, {"boundary", ob.page.boundary}};
  j["monodromy"] = Json::array();
  for (const auto& l : ob.monodromy) j["monodromy"].push_back({{"curve", l.curve}, {"sign", l.sign}});
  if (ob.delta) j["delta"] = {{"curve", *ob.delta}};
  j["framing"] = ob.framing;
  return j;
}

OpenBookSpec open_book_from_json(const Json& j) {
  OpenBookSpec ob;
  const Json page = field<Json>(j, "page");
  ob.page.genus = field<int>(page, "genus");
  ob.page.boundary = field<int>(page, "boundary");
  if (j.contains("monodromy")) {
    const Json word = field<Json>(j, "monodromy");
    if (!word.is_array()) throw Error(ErrorCode::InvalidInput, "monodromy must be a list");
    for (std::size_t i = 0; i < word.size(); ++i) {
      const Json& l = word[i];
      const std::string at = "monodromy[" + std::to_string(i) + "]: ";
      MonodromyLetter letter;
      try {
        letter.curve = field<std::string>(l, "curve");
      } catch (const Error& e) {
        throw Error(ErrorCode::InvalidInput, at + e.detail());
      }
      const Json sign = l.value("sign", Json(1));
      if (sign == Json(1) || sign == Json("+")) {
        letter.sign = 1;
      } else if (sign == Json(-1) || sign == Json("-")) {
        letter.sign = -1;
      } else {
        throw Error(ErrorCode::InvalidInput, at + "sign must be +1 or -1");
      }
      ob.monodromy.push_back(letter);
    }
  }
  if (j.contains("delta") && !j.at("delta").is_null()) {
    const Json& d = j.at("delta");
    ob.delta = d.is_string() ? d.get<std::string>() : field<std::string>(d, "curve");
  }
  if (j.contains("framing")) ob.framing = field<int>(j, "framing");
  return ob;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace hfdts
