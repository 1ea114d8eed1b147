#include "toricmirror/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "toricmirror/errors.hpp"
#include "toricmirror/rootsystems.hpp"

namespace toricmirror {
namespace {

Rat json_rat(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::kParse, where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long long>());
  if (j.is_number_float()) throw Error(ErrorKind::kParse, where + ": floating-point numbers are not accepted");
  throw Error(ErrorKind::kParse, where + ": expected a rational");
}

Integer json_integer(const Json& j, const std::string& where) {
  const Rat r = json_rat(j, where);
  if (!is_integral(r)) throw Error(ErrorKind::kParse, where + ": expected an integer");
  return numerator_of(r);
}

Json string_list(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json check_json(const CheckResult& c) {
  Json w = Json::array();
  for (const auto& x : c.witnesses) {
    w.push_back({{"relation", x.relation}, {"image", x.image}, {"normal_form", x.normal_form}, {"ok", x.ok}});
  }
  return {{"ok", c.ok}, {"witnesses", w}};
}

/// Plain JSON integer when it fits in 64 bits, otherwise a string.
Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::vector<Halfspace> orbit_halfspaces(const ReflectionGroup& w, const LatticeVec& v, const Rat& offset) {
  std::vector<Halfspace> hs;
  for (const auto& e : w.elements()) {
    const LatticeVec n = act_on_normal(e.matrix, v);
    bool seen = false;
    for (const auto& h : hs) seen = seen || h.normal == n;
    if (!seen) hs.push_back({n, offset});
  }
  return hs;
}

}  // namespace

NamedPolygon parse_polygon_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::kParse, "polygon must be a JSON object");
  NamedPolygon out;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorKind::kParse, "name must be a string");
    out.name = j["name"].get<std::string>();
  }
  const bool has_vertices = j.contains("vertices");
  const bool has_halfspaces = j.contains("halfspaces");
  if (!has_vertices && !has_halfspaces) {
    throw Error(ErrorKind::kParse, "one of \"vertices\" and \"halfspaces\" is required");
  }
  std::optional<RationalPolygon> from_vertices;
  if (has_vertices) {
    const Json& vs = j["vertices"];
    if (!vs.is_array()) throw Error(ErrorKind::kParse, "vertices must be an array");
    std::vector<RatPoint> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string where = "vertex " + std::to_string(i);
      if (!vs[i].is_array() || vs[i].size() != 2) throw Error(ErrorKind::kParse, where + ": expected [x, y]");
      pts.push_back({json_rat(vs[i][0], where), json_rat(vs[i][1], where)});
    }
    from_vertices = polygon_from_vertices(pts);
    out.polygon = *from_vertices;
  }
  if (has_halfspaces) {
    const Json& hs = j["halfspaces"];
    if (!hs.is_array()) throw Error(ErrorKind::kParse, "halfspaces must be an array");
    std::vector<Halfspace> list;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const std::string where = "halfspace " + std::to_string(i);
      const Json& h = hs[i];
      if (!h.is_object() || !h.contains("normal") || !h.contains("offset") || !h["normal"].is_array() ||
          h["normal"].size() != 2) {
        throw Error(ErrorKind::kParse, where + ": expected {\"normal\": [a, b], \"offset\": \"p/q\"}");
      }
      list.push_back({{json_integer(h["normal"][0], where), json_integer(h["normal"][1], where)},
                      json_rat(h["offset"], where)});
    }
    out.polygon = polygon_from_halfspaces(list);
  }
  // Both keys are allowed (polygon_to_json writes both) if they agree.
  if (from_vertices) {
    const auto a = from_vertices->halfspaces();
    const auto b = out.polygon.halfspaces();
    const bool same = a.size() == b.size() && std::all_of(a.begin(), a.end(), [&](const Halfspace& h) {
                        return std::find(b.begin(), b.end(), h) != b.end();
                      });
    if (!same) throw Error(ErrorKind::kParse, "\"vertices\" and \"halfspaces\" describe different polygons");
    out.polygon = *from_vertices;
  }
  return out;
}

NamedPolygon load_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidInput, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  NamedPolygon p = parse_polygon_json(buffer.str());
  if (p.name.empty()) p.name = path;
  return p;
}

Json rat_json(const Rat& x) { return to_string(x); }

Json polygon_to_json(const std::string& name, const RationalPolygon& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back({rat_json(v.x), rat_json(v.y)});
  Json halfspaces = Json::array();
  for (const auto& h : p.halfspaces()) {
    halfspaces.push_back(
        {{"normal", {integer_json(h.normal.x), integer_json(h.normal.y)}}, {"offset", rat_json(h.offset)}});
  }
  return {{"name", name}, {"vertices", vertices}, {"halfspaces", halfspaces}};
}

Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json ring_to_json(const CohomologyRing& ring, const ReflectionGroup* group, const GroupRepresentation* rep) {
  const auto b = ring.betti();
  std::vector<std::string> basis;
  for (std::size_t v : ring.deg2_basis()) basis.push_back(ring.presentation().names[v]);
  Json out = {{"betti", {b[0], b[1], b[2]}},
              {"deg2_basis", string_list(basis)},
              {"pairing", matrix_to_json(ring.poincare_pairing())},
              {"sr_generator_count", ring.presentation().sr_generators.size()},
              {"variables", string_list(ring.presentation().names)}};
  if (group && rep) {
    Json action = Json::object();
    for (std::size_t u = 0; u < group->order(); ++u) {
      action[group->element_name(u)] = {{"deg2", matrix_to_json(rep->deg2[u])}, {"deg4", rat_json(rep->deg4[u])}};
    }
    out["action"] = action;
  }
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json c = Json::object();
  Json d = Json::object();
  for (std::size_t j = 0; j < r.inherited_labels.size(); ++j) {
    Json cj = Json::object();
    Json dj = Json::object();
    for (std::size_t u = 0; u < r.element_names.size(); ++u) {
      cj[r.element_names[u]] = rat_json(r.coefficients.c.at(u).at(j));
      if (!r.coefficients.d.empty()) dj[r.element_names[u]] = rat_json(r.coefficients.d.at(u).at(j));
    }
    c[r.inherited_labels[j]] = cj;
    if (!r.coefficients.d.empty()) d[r.inherited_labels[j]] = dj;
  }
  Json images = Json::object();
  for (std::size_t i = 0; i < r.images.size(); ++i) images[r.source_names[i]] = r.images[i];
  Json replays = Json::array();
  for (const auto& x : r.replays) replays.push_back({{"name", x.name}, {"ok", x.ok}, {"detail", x.detail}});
  const auto& g = r.graded_dims;
  return {{"case", case_name(r.symmetry_case.kind)},
          {"n", r.n},
          {"group_order", r.group_order},
          {"ell", r.ell},
          {"elements", string_list(r.element_names)},
          {"well_defined", check_json(r.well_defined)},
          {"image_invariant", check_json(r.image_invariant)},
          {"graded_dims", {g.source2, g.invariant2, g.source4, g.invariant4}},
          {"injective", r.injective},
          {"surjective", r.surjective},
          {"multiplicative", r.multiplicative},
          {"isomorphism", r.isomorphism},
          {"pd_shortcut_used", r.pd_shortcut_used},
          {"pd_shortcut_verdict", r.pd_shortcut_verdict},
          {"pd_shortcut_agrees", r.pd_shortcut_agrees},
          {"top_scalar", rat_json(r.top_scalar)},
          {"coefficients", {{"c", c}, {"d", d}}},
          {"coefficients_integral", r.coefficients_integral},
          {"coefficient_vanishing", optional_bool(r.coefficient_vanishing)},
          {"conditions", {{"i", optional_bool(r.condition_i)},
                          {"ii", optional_bool(r.condition_ii)},
                          {"iii", optional_bool(r.condition_iii)}}},
          {"images", images},
          {"replays", replays},
          {"warnings", string_list(r.warnings)}};
}

std::vector<std::string> builtin_names() { return {"square", "hexagon", "house", "g2", "d12", "d8"}; }

NamedPolygon builtin_polygon(std::string_view name) {
  if (name == "square") return {"square", polygon_from_vertices({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})};
  if (name == "hexagon") {
    return {"hexagon", polygon_from_vertices({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}})};
  }
  if (name == "house") return {"house", polygon_from_vertices({{-1, -1}, {1, -1}, {1, 1}, {0, 2}, {-1, 1}})};
  if (name == "g2") {
    const RootSystemRank2 rs = root_system(RootType::kG2);
    return {"g2", weight_polytope(rs, default_offsets(rs))};
  }
  if (name == "d12") {
    // Normals form the Weyl orbit of a vector on no mirror, so every mirror
    // passes through two vertices.
    const ReflectionGroup w = weyl_group(root_system(RootType::kG2));
    return {"d12", polygon_from_halfspaces(orbit_halfspaces(w, {3, 1}, -1))};
  }
  if (name == "d8") {
    std::vector<Halfspace> hs;
    for (LatticeVec v : {LatticeVec{1, 0}, LatticeVec{0, 1}, LatticeVec{-1, 0}, LatticeVec{0, -1}}) hs.push_back({v, -4});
    for (LatticeVec v : {LatticeVec{2, 1}, LatticeVec{1, 2}, LatticeVec{-1, 2}, LatticeVec{-2, 1}, LatticeVec{-2, -1},
                         LatticeVec{-1, -2}, LatticeVec{1, -2}, LatticeVec{2, -1}}) {
      hs.push_back({v, -9});
    }
    return {"d8", polygon_from_halfspaces(hs)};
  }
  throw Error(ErrorKind::kInvalidInput, "unknown builtin \"" + std::string(name) + "\"");
}

}  // namespace toricmirror
