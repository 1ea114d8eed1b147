// Python module: polygons in, JSON-shaped dicts out.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toricmirror/cli.hpp"
#include "toricmirror/errors.hpp"
#include "toricmirror/io.hpp"
#include "toricmirror/rootsystems.hpp"
#include "toricmirror/theorem.hpp"

namespace py = pybind11;
using namespace toricmirror;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

/// ints, strings "p/q" and fractions.Fraction; floats are refused.
Rat to_rat(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) throw Error(ErrorKind::kParse, "floats are not exact; use \"p/q\" strings");
  return parse_rat(py::str(obj).cast<std::string>());
}

RationalPolygon from_vertices(const std::vector<std::pair<py::object, py::object>>& pts) {
  std::vector<RatPoint> v;
  for (const auto& [x, y] : pts) v.push_back({to_rat(x), to_rat(y)});
  return polygon_from_vertices(v);
}

RationalPolygon from_halfspaces(const std::vector<std::pair<std::pair<long, long>, py::object>>& hs) {
  std::vector<Halfspace> out;
  for (const auto& [n, offset] : hs) out.push_back({{n.first, n.second}, to_rat(offset)});
  return polygon_from_halfspaces(out);
}

py::object verify(const RationalPolygon& p, const std::string& group) {
  return to_python(report_to_json(verify_theorem(p, group_from_spec(p, group))));
}

py::object ring(const RationalPolygon& p, const std::string& group) {
  const CohomologyRing r = build_ring(presentation(p));
  if (group.empty()) return to_python(ring_to_json(r));
  const ReflectionGroup w = group_from_spec(p, group);
  const GroupRepresentation rep = group_action(r, p, w);
  return to_python(ring_to_json(r, &w, &rep));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(toricmirror, m) {
  m.doc() = "Rational cohomology of toric surfaces and their reflection quotients";
  static py::exception<Error> error(m, "ToricMirrorError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), std::string(error_kind_name(e.kind()))).ptr());
    }
  });

  py::class_<RationalPolygon>(m, "Polygon")
      .def_property_readonly("vertices",
                             [](const RationalPolygon& p) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& v : p.vertices()) out.emplace_back(to_string(v.x), to_string(v.y));
                               return out;
                             })
      .def_property_readonly("normals",
                             [](const RationalPolygon& p) {
                               std::vector<std::pair<long, long>> out;
                               for (const auto& e : p.edges()) out.emplace_back(e.normal.x.convert_to<long>(), e.normal.y.convert_to<long>());
                               return out;
                             })
      .def_property_readonly("offsets",
                             [](const RationalPolygon& p) {
                               std::vector<std::string> out;
                               for (const auto& e : p.edges()) out.push_back(to_string(e.offset));
                               return out;
                             })
      .def_property_readonly("area", [](const RationalPolygon& p) { return to_string(p.area()); })
      .def("__len__", &RationalPolygon::size)
      .def("to_json", [](const RationalPolygon& p, const std::string& name) { return to_python(polygon_to_json(name, p)); },
           py::arg("name") = "polygon");

  m.def("polygon_from_vertices", &from_vertices, py::arg("vertices"));
  m.def("polygon_from_halfspaces", &from_halfspaces, py::arg("halfspaces"), "Pairs ((a, b), offset).");
  m.def("polygon_from_json", [](const std::string& text) { return parse_polygon_json(text).polygon; });
  m.def("builtin", [](const std::string& name) { return builtin_polygon(name).polygon; }, py::arg("name"));
  m.def("builtin_names", &builtin_names);
  m.def("betti", [](const RationalPolygon& p) { return build_ring(presentation(p)).betti(); });
  m.def("ring", &ring, py::arg("polygon"), py::arg("group") = "", "Ring data, with the group action if a group is given.");
  m.def("reflections", [](const RationalPolygon& p) {
    std::vector<py::dict> out;
    for (const auto& r : detect_reflections(p)) {
      py::dict d;
      d["matrix"] = to_string(r.matrix);
      d["mirror_normal"] = py::make_tuple(r.mirror_normal.x.convert_to<long>(), r.mirror_normal.y.convert_to<long>());
      d["case"] = case_name(classify_single(p, r).kind);
      out.push_back(d);
    }
    return out;
  });
  m.def("verify", &verify, py::arg("polygon"), py::arg("group") = "auto",
        "Verification report; group is auto, reflection:<k> or dihedral:<i>,<j>.");
  m.def("weight_polygon", [](const std::string& type) {
    const auto rs = root_system(parse_root_type(type));
    return weight_polytope(rs, default_offsets(rs));
  });
  m.def("g2_golden_table", [] {
    const auto t = g2_golden_table(root_system(RootType::kG2));
    auto ints = [](const std::vector<Rat>& row) {
      std::vector<std::string> out;
      for (const Rat& v : row) out.push_back(to_string(v));
      return out;
    };
    py::dict d;
    d["s1_reps"] = t.s1_reps;
    d["s2_reps"] = t.s2_reps;
    d["c1"] = ints(t.c1);
    d["d1"] = ints(t.d1);
    d["c2"] = ints(t.c2);
    d["d2"] = ints(t.d2);
    return d;
  });
  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
