#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "toricmirror/cli.hpp"
#include "toricmirror/errors.hpp"
#include "toricmirror/io.hpp"

using namespace toricmirror;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("toricmirror-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

std::set<std::string> halfspace_set(const RationalPolygon& p) {
  std::set<std::string> out;
  for (const auto& h : p.halfspaces()) out.insert(to_string(h.normal) + " " + to_string(h.offset));
  return out;
}

const char* kSquareJson = R"({"name": "sq", "vertices": [["1","1"],["-1","1"],["-1","-1"],["1","-1"]]})";

}  // namespace

TEST_CASE("polygon JSON parsing") {
  const auto sq = parse_polygon_json(kSquareJson);
  CHECK(sq.name == "sq");
  CHECK(sq.polygon.size() == 4);
  const auto hs = parse_polygon_json(
      R"({"name": "h", "halfspaces": [{"normal": [1,0], "offset": "-1/2"}, {"normal": [0,1], "offset": -1},
          {"normal": [-1,0], "offset": "-1"}, {"normal": [0,-1], "offset": "-3/2"}]})");
  CHECK(hs.polygon.area() == Rat(3, 2) * Rat(5, 2));
  CHECK(parse_polygon_json(R"({"vertices": [[1, 0], [0, 1], [-1, -1]]})").polygon.size() == 3);
}

TEST_CASE("polygon JSON rejects floats and malformed input") {
  for (const char* bad : {R"({"vertices": [[1.0, 0], [0, 1], [-1, -1]]})",
                          R"({"vertices": [["0.5", 0], [0, 1], [-1, -1]]})",
                          R"({"vertices": [["1","1"],["-1","1"],["-1","-1"],["1","-1"]],
                              "halfspaces": [{"normal": [1,0], "offset": "-2"}, {"normal": [0,1], "offset": "-1"},
                                             {"normal": [-1,0], "offset": "-1"}, {"normal": [0,-1], "offset": "-1"}]})",
                          R"({"name": "none"})",
                          R"({"vertices": [[1, 0], [0, 1], [-1, -1]]} trailing)",
                          R"([1, 2, 3])"}) {
    CAPTURE(bad);
    try {
      parse_polygon_json(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kParse);
    }
  }
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [[3, 3], [4, 3], [3, 4]]})"), Error);
  CHECK_THROWS_AS(parse_polygon_json(R"({"vertices": [[1, 0], [0, 1], [-1, -1]], "halfspaces": []})"), Error);
}

TEST_CASE("polygon JSON round trip") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto np = builtin_polygon(name);
    const Json j = polygon_to_json(np.name, np.polygon);
    const auto back = parse_polygon_json(j.dump());
    CHECK(back.name == name);
    CHECK(back.polygon.vertices() == np.polygon.vertices());
    CHECK(back.polygon.halfspaces() == np.polygon.halfspaces());
    Json only_hs = j;
    only_hs.erase("vertices");
    // The starting edge is free; compare the half-plane sets.
    CHECK(halfspace_set(parse_polygon_json(only_hs.dump()).polygon) == halfspace_set(np.polygon));
  }
}

TEST_CASE("rationals are rendered as strings") {
  CHECK(rat_json(Rat(-3, 6)) == Json("-1/2"));
  CHECK(rat_json(Rat(4)) == Json("4"));
}

TEST_CASE("cli betti") {
  const auto r = run_cli({"betti", "--builtin", "square"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("b = (1, 2, 1)") != std::string::npos);
  const auto j = run_cli({"betti", "--builtin", "g2", "--group", "auto", "--format", "json"});
  CHECK(j.code == kExitOk);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["betti"] == Json::array({1, 10, 1}));
  CHECK(parsed["action"].size() == 12);
}

TEST_CASE("cli verify writes a deterministic JSON report") {
  const auto dir = scratch_dir("verify");
  const auto g2 = builtin_polygon("g2");
  write(dir / "g2.json", polygon_to_json(g2.name, g2.polygon).dump());
  const auto a = run_cli({"verify", "--input", (dir / "g2.json").string(), "--group", "auto", "--format", "json"});
  const auto b = run_cli({"verify", "--builtin", "g2", "--format", "json"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Json report = Json::parse(a.out);
  CHECK(report["isomorphism"] == true);
  CHECK(report["case"] == "2-1");
  CHECK(report["n"] == 2);
  CHECK(report["well_defined"]["ok"] == true);
  CHECK(report["image_invariant"]["ok"] == true);
  CHECK(report["graded_dims"] == Json::array({2, 2, 1, 1}));
  CHECK(report["pd_shortcut_agrees"] == true);
  CHECK(report["warnings"].empty());
  CHECK(report["coefficients"]["c"].contains("E1"));

  const auto out_file = dir / "report.json";
  CHECK(run_cli({"verify", "--builtin", "g2", "--format", "json", "--output", out_file.string()}).code == kExitOk);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("cli verify text uses the reference labelling for dihedral:1,0") {
  const auto r = run_cli({"verify", "--builtin", "g2", "--group", "dihedral:1,0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("c(E1): id=0 s1=0 s2=0 s1s2=1") != std::string::npos);
  CHECK(r.out.find("isomorphism: yes") != std::string::npos);
}

TEST_CASE("cli input errors exit with 2") {
  const auto dir = scratch_dir("errors");
  write(dir / "asym.json", R"({"name": "asym", "vertices": [["3","-1"],["-1","2"],["-1","-1"]]})");
  write(dir / "float.json", R"({"name": "f", "vertices": [[1.5, 0], [0, 1], [-1, -1]]})");
  write(dir / "concave.json", R"({"name": "c", "vertices": [[1,1],[-1,1],[0,0],[-1,-1],[1,-1]]})");
  write(dir / "broken.json", R"({"name": )");
  const auto asym = run_cli({"verify", "--input", (dir / "asym.json").string(), "--group", "reflection:0"});
  CHECK(asym.code == kExitInputError);
  CHECK(asym.err.find("NotASymmetry") != std::string::npos);
  for (const char* f : {"float.json", "concave.json", "broken.json", "missing.json"}) {
    CAPTURE(f);
    CHECK(run_cli({"analyze", "--input", (dir / f).string()}).code == kExitInputError);
  }
  CHECK(run_cli({}).code == kExitInputError);
  CHECK(run_cli({"verify"}).code == kExitInputError);
  CHECK(run_cli({"verify", "--builtin", "nonagon"}).code == kExitInputError);
  CHECK(run_cli({"verify", "--builtin", "g2", "--format", "xml"}).code == kExitInputError);
  CHECK(run_cli({"verify", "--builtin", "g2", "--group", "dihedral:0,9"}).code == kExitInputError);
  CHECK(run_cli({"verify", "--builtin", "g2", "--group", "dihedral:2,2"}).code == kExitInputError);
  CHECK(run_cli({"verify", "--builtin", "g2", "--group", "dihedral:0,3"}).code == kExitOk);
  CHECK(run_cli({"frobnicate"}).code == kExitInputError);
  CHECK(run_cli({"--help"}).code == kExitOk);
}

TEST_CASE("cli batch mode") {
  const auto dir = scratch_dir("batch");
  for (const auto& name : {"square", "house", "hexagon"}) {
    const auto np = builtin_polygon(name);
    write(dir / (std::string(name) + ".json"), polygon_to_json(np.name, np.polygon).dump());
  }
  write(dir / "notes.txt", "ignored");
  const auto ok = run_cli({"verify", "--input-dir", dir.string(), "--format", "json"});
  CHECK(ok.code == kExitOk);
  const Json all = Json::parse(ok.out);
  REQUIRE(all.size() == 3);
  CHECK(all[0]["file"] == "hexagon.json");
  CHECK(all[2]["file"] == "square.json");
  for (const auto& item : all) CHECK(item["result"]["isomorphism"] == true);

  write(dir / "zz.json", R"({"name": "bad", "vertices": [[0.5, 0]]})");
  CHECK(run_cli({"verify", "--input-dir", dir.string()}).code == kExitInputError);
}

TEST_CASE("cli analyze, symmetries and rootdemo") {
  const auto a = run_cli({"analyze", "--builtin", "square", "--format", "json"});
  CHECK(a.code == kExitOk);
  const Json sq = Json::parse(a.out);
  CHECK(sq["edges"].size() == 4);
  CHECK(sq["area"] == "4");
  CHECK(sq["non_adjacent_pairs"].size() == 2);

  const Json sym = Json::parse(run_cli({"symmetries", "--builtin", "g2", "--format", "json"}).out);
  CHECK(sym["reflections"].size() == 6);
  for (const auto& g : sym["maximal_dihedral_groups"]) CHECK(g["order"] == 12);

  const auto demo = run_cli({"rootdemo", "--type", "G2", "--format", "json"});
  CHECK(demo.code == kExitOk);
  const Json d = Json::parse(demo.out);
  CHECK(d["golden"]["matches"] == true);
  CHECK(d["golden"]["diff"].empty());
  CHECK(d["polygon"]["halfspaces"].size() == 12);

  const Json dilated = Json::parse(run_cli({"rootdemo", "--type", "b2", "--offset", "3/2", "--format", "json"}).out);
  CHECK(dilated["polygon"]["halfspaces"].size() == 8);
  CHECK_FALSE(dilated.contains("golden"));
  CHECK(run_cli({"rootdemo", "--type", "G2", "--offsets", "-1,-1"}).code == kExitInputError);
  CHECK(run_cli({"rootdemo", "--type", "E8"}).code == kExitInputError);
  CHECK(run_cli({"rootdemo", "--offset", "-1"}).code == kExitInputError);
}
