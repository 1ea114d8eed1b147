#include "toricmirror/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "toricmirror/errors.hpp"
#include "toricmirror/io.hpp"
#include "toricmirror/rootsystems.hpp"
#include "toricmirror/theorem.hpp"

namespace toricmirror {
namespace {

struct Options {
  std::string input;
  std::string builtin;
  std::string input_dir;
  std::string group = "auto";
  std::string format = "text";
  std::string output;
  std::string root_type = "G2";
  std::string offset = "1";
  std::string offsets;
};

/// Output of one command on one polygon.
struct Outcome {
  int code = kExitOk;
  Json json;
  std::string text;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string matrix_text(const RatMatrix& m, const std::string& indent) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out += indent + "[" + join(row, ", ") + "]\n";
  }
  return out;
}

Outcome analyze(const NamedPolygon& np) {
  const RationalPolygon& p = np.polygon;
  Outcome o;
  o.json = polygon_to_json(np.name, p);
  Json edges = Json::array();
  std::ostringstream t;
  t << "polygon: " << np.name << " (" << p.size() << " edges, area " << to_string(p.area()) << ")\n";
  t << "edges:\n";
  for (const auto& e : p.edges()) {
    edges.push_back({{"index", e.index},
                     {"start", {rat_json(e.start.x), rat_json(e.start.y)}},
                     {"end", {rat_json(e.end.x), rat_json(e.end.y)}},
                     {"normal", {e.normal.x.str(), e.normal.y.str()}},
                     {"offset", rat_json(e.offset)}});
    t << "  E" << e.index << ": " << to_string(e.start) << " -> " << to_string(e.end) << "  normal "
      << to_string(e.normal) << "  offset " << to_string(e.offset) << "\n";
  }
  Json non_adjacent = Json::array();
  std::vector<std::string> pairs;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (adjacent(p, i, j)) continue;
      non_adjacent.push_back({i, j});
      pairs.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  t << "non-adjacent pairs: " << (pairs.empty() ? "none" : join(pairs, " ")) << "\n";
  o.json["edges"] = edges;
  o.json["area"] = rat_json(p.area());
  o.json["non_adjacent_pairs"] = non_adjacent;
  o.text = t.str();
  return o;
}

Outcome betti(const NamedPolygon& np, const Options& opt, bool group_given) {
  const CohomologyRing ring = build_ring(presentation(np.polygon));
  Outcome o;
  std::ostringstream t;
  const auto b = ring.betti();
  t << "b = (" << b[0] << ", " << b[1] << ", " << b[2] << ")\n";
  std::vector<std::string> basis;
  for (std::size_t v : ring.deg2_basis()) basis.push_back(ring.presentation().names[v]);
  t << "H^2 basis: " << join(basis, ", ") << "\n";
  t << "Stanley-Reisner generators: " << ring.presentation().sr_generators.size() << "\n";
  t << "pairing:\n" << matrix_text(ring.poincare_pairing(), "  ");
  if (group_given) {
    const ReflectionGroup w = group_from_spec(np.polygon, opt.group);
    const GroupRepresentation rep = group_action(ring, np.polygon, w);
    o.json = ring_to_json(ring, &w, &rep);
    for (std::size_t u = 0; u < w.order(); ++u) {
      t << "action of " << w.element_name(u) << " (H^4 scalar " << to_string(rep.deg4[u]) << "):\n"
        << matrix_text(rep.deg2[u], "  ");
    }
  } else {
    o.json = ring_to_json(ring);
  }
  o.json["name"] = np.name;
  o.text = t.str();
  return o;
}

Outcome symmetries(const NamedPolygon& np) {
  const RationalPolygon& p = np.polygon;
  const auto refl = detect_reflections(p);
  Outcome o;
  std::ostringstream t;
  t << "polygon: " << np.name << "\n" << refl.size() << " reflection(s)\n";
  Json reflections = Json::array();
  for (std::size_t i = 0; i < refl.size(); ++i) {
    const auto perm = induced_edge_permutation(p, refl[i]);
    const SymmetryCase c = classify_single(p, refl[i]);
    Json perm_json = Json::array();
    std::vector<std::string> perm_text;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      perm_json.push_back(perm[k]);
      perm_text.push_back(std::to_string(perm[k]));
    }
    reflections.push_back({{"index", i},
                           {"matrix", to_string(refl[i].matrix)},
                           {"mirror_normal", {refl[i].mirror_normal.x.str(), refl[i].mirror_normal.y.str()}},
                           {"edge_permutation", perm_json},
                           {"case", case_name(c.kind)}});
    t << "  [" << i << "] " << to_string(refl[i].matrix) << "  mirror normal " << to_string(refl[i].mirror_normal)
      << "  case " << case_name(c.kind) << "  edges -> (" << join(perm_text, " ") << ")\n";
  }
  Json groups = Json::array();
  std::size_t max_order = 0;
  for (std::size_t i = 0; i < refl.size(); ++i)
    for (std::size_t j = i + 1; j < refl.size(); ++j) max_order = std::max(max_order, dihedral_group(refl[i], refl[j]).order());
  for (std::size_t i = 0; i < refl.size(); ++i) {
    for (std::size_t j = i + 1; j < refl.size(); ++j) {
      const ReflectionGroup w = dihedral_group(refl[i], refl[j]);
      if (w.order() != max_order) continue;
      Json g = {{"generators", {i, j}}, {"order", w.order()}, {"ell", w.ell()}};
      std::string kind = "mirrors do not bound a chamber";
      try {
        const SymmetryCase c = classify_dihedral(p, w);
        g["case"] = case_name(c.kind);
        kind = "case " + case_name(c.kind);
      } catch (const Error&) {
        g["case"] = nullptr;
      }
      groups.push_back(g);
      t << "  dihedral:" << i << "," << j << "  order " << w.order() << "  " << kind << "\n";
    }
  }
  if (groups.empty()) t << "no dihedral group\n";
  o.json = {{"name", np.name}, {"reflections", reflections}, {"maximal_dihedral_groups", groups}};
  o.text = t.str();
  return o;
}

std::string report_text(const std::string& name, const VerificationReport& r) {
  std::ostringstream t;
  const auto& g = r.graded_dims;
  t << "polygon: " << name << "\n";
  t << "group: order " << r.group_order << (r.group_order == 2 ? " (single reflection)" : "") << "\n";
  t << "case: " << case_name(r.symmetry_case.kind) << ", n = " << r.n << "\n";
  t << "well-defined: " << yes_no(r.well_defined.ok) << " (" << r.well_defined.witnesses.size()
    << " relations checked)\n";
  t << "image invariant: " << yes_no(r.image_invariant.ok) << "\n";
  t << "graded dims: H^2(P/W) = " << g.source2 << ", H^2(P)^W = " << g.invariant2 << ", H^4(P/W) = " << g.source4
    << ", H^4(P)^W = " << g.invariant4 << "\n";
  t << "injective: " << yes_no(r.injective) << ", surjective: " << yes_no(r.surjective)
    << ", multiplicative: " << yes_no(r.multiplicative) << "\n";
  t << "top-degree scalar: " << to_string(r.top_scalar) << "\n";
  t << "isomorphism: " << yes_no(r.isomorphism) << "\n";
  t << "Poincare duality shortcut: " << yes_no(r.pd_shortcut_verdict) << " (agrees: " << yes_no(r.pd_shortcut_agrees)
    << ")\n";
  t << "images:\n";
  for (std::size_t i = 0; i < r.images.size(); ++i) t << "  " << r.source_names[i] << " -> " << r.images[i] << "\n";
  t << "coefficients:\n";
  for (std::size_t j = 0; j < r.inherited_labels.size(); ++j) {
    std::vector<std::string> cs;
    std::vector<std::string> ds;
    for (std::size_t u = 0; u < r.element_names.size(); ++u) {
      cs.push_back(r.element_names[u] + "=" + to_string(r.coefficients.c[u][j]));
      if (!r.coefficients.d.empty()) ds.push_back(r.element_names[u] + "=" + to_string(r.coefficients.d[u][j]));
    }
    t << "  c(" << r.inherited_labels[j] << "): " << join(cs, " ") << "\n";
    if (!ds.empty()) t << "  d(" << r.inherited_labels[j] << "): " << join(ds, " ") << "\n";
  }
  if (r.coefficient_vanishing) t << "coefficient vanishing: " << yes_no(*r.coefficient_vanishing) << "\n";
  if (r.condition_i) t << "condition (i): " << yes_no(*r.condition_i) << "\n";
  if (r.condition_ii) t << "condition (ii): " << yes_no(*r.condition_ii) << "\n";
  if (r.condition_iii) t << "condition (iii): " << yes_no(*r.condition_iii) << "\n";
  t << "replays:\n";
  for (const auto& x : r.replays) t << "  [" << (x.ok ? "ok" : "FAIL") << "] " << x.name << ": " << x.detail << "\n";
  for (const auto* check : {&r.well_defined, &r.image_invariant}) {
    for (const auto& w : check->witnesses) {
      if (!w.ok) t << "  failed: " << w.relation << " -> " << w.image << " = " << w.normal_form << "\n";
    }
  }
  t << "warnings: " << (r.warnings.empty() ? "none" : join(r.warnings, "; ")) << "\n";
  return t.str();
}

Outcome verify(const NamedPolygon& np, const Options& opt) {
  const ReflectionGroup w = group_from_spec(np.polygon, opt.group);
  const VerificationReport r = verify_theorem(np.polygon, w);
  Outcome o;
  o.json = report_to_json(r);
  o.json["name"] = np.name;
  o.text = report_text(np.name, r);
  o.code = r.isomorphism ? kExitOk : kExitVerificationFailed;
  return o;
}

WeightOffsets parse_offsets(const RootSystemRank2& rs, const Options& opt) {
  if (!opt.offsets.empty()) {
    const auto comma = opt.offsets.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::kParse, "--offsets expects a,b");
    return {parse_rat(opt.offsets.substr(0, comma)), parse_rat(opt.offsets.substr(comma + 1))};
  }
  const Rat scale = parse_rat(opt.offset);
  if (scale <= 0) throw Error(ErrorKind::kDegenerateOffsets, "--offset must be positive");
  const WeightOffsets base = default_offsets(rs);
  return {scale * base.a, scale * base.b};
}

Outcome rootdemo(const Options& opt) {
  const RootSystemRank2 rs = root_system(parse_root_type(opt.root_type));
  const WeightOffsets offsets = parse_offsets(rs, opt);
  const RationalPolygon p = weight_polytope(rs, offsets);
  const ReflectionGroup w = weyl_group(rs);
  Outcome o;
  std::ostringstream t;
  const std::string name = root_type_name(rs.type) + " weight polygon";
  t << name << ": offsets a = " << to_string(offsets.a) << " (omega_2 family), b = " << to_string(offsets.b)
    << " (omega_1 family), " << p.size() << " edges, Weyl group of order " << w.order() << "\n";
  for (std::size_t i = 0; i < 2; ++i) {
    t << "  s" << i + 1 << " on N: " << to_string(rs.weyl_on_coweights[i]) << "  coroot "
      << to_string(rs.simple_coroots[i]) << "\n";
  }
  for (const auto& e : p.edges()) t << "  normal " << to_string(e.normal) << "  offset " << to_string(e.offset) << "\n";
  o.json = {{"type", root_type_name(rs.type)},
            {"offsets", {{"a", rat_json(offsets.a)}, {"b", rat_json(offsets.b)}}},
            {"polygon", polygon_to_json(name, p)},
            {"weyl_group_order", w.order()},
            {"generators_on_coweights", {to_string(rs.weyl_on_coweights[0]), to_string(rs.weyl_on_coweights[1])}}};
  if (rs.type == RootType::kG2) {
    const WeightOffsets base = default_offsets(rs);
    const GoldenTable got = g2_golden_table(rs);
    const GoldenTable ref = g2_reference_table();
    Json diff = Json::array();
    auto compare = [&](const char* row, const std::vector<Rat>& a, const std::vector<Rat>& b) {
      std::vector<std::string> shown;
      for (std::size_t k = 0; k < b.size(); ++k) {
        shown.push_back(to_string(a.at(k)));
        if (a.at(k) != b[k]) {
          diff.push_back({{"row", row}, {"position", k}, {"computed", to_string(a[k])}, {"expected", to_string(b[k])}});
        }
      }
      t << "  " << row << ": " << join(shown, " ") << "\n";
      return shown;
    };
    t << "coefficient table on the default polygon (E1 over ^{s1}W = " << join(got.s1_reps, ", ")
      << "; E2 over ^{s2}W = " << join(got.s2_reps, ", ") << "):\n";
    Json rows = {{"c1", compare("c(u,1)", got.c1, ref.c1)},
                 {"d1", compare("d(u,1)", got.d1, ref.d1)},
                 {"c2", compare("c(u,2)", got.c2, ref.c2)},
                 {"d2", compare("d(u,2)", got.d2, ref.d2)}};
    if (got.s1_reps != ref.s1_reps || got.s2_reps != ref.s2_reps) {
      diff.push_back({{"row", "coset representatives"}, {"computed", join(got.s1_reps, ",") + ";" + join(got.s2_reps, ",")}});
    }
    t << "reference table: " << (diff.empty() ? "all 24 entries match" : std::to_string(diff.size()) + " mismatches")
      << "\n";
    o.json["golden"] = {{"default_offsets", {{"a", rat_json(base.a)}, {"b", rat_json(base.b)}}},
                        {"s1_reps", got.s1_reps},
                        {"s2_reps", got.s2_reps},
                        {"rows", rows},
                        {"diff", diff},
                        {"matches", diff.empty()}};
    if (!diff.empty()) o.code = kExitVerificationFailed;
  }
  o.text = t.str();
  return o;
}

int emit(const Options& opt, const Json& json, const std::string& text, std::ostream& out, std::ostream& err) {
  const std::string body = opt.format == "json" ? json.dump(2) + "\n" : text;
  if (opt.output.empty()) {
    out << body;
    return kExitOk;
  }
  std::ofstream file(opt.output);
  if (!file) {
    err << "error: cannot write " << opt.output << "\n";
    return kExitInputError;
  }
  file << body;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational cohomology of toric surfaces and their reflection quotients"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub, bool with_group) {
    auto* in = sub->add_option("--input", opt.input, "Polygon JSON file");
    auto* bi = sub->add_option("--builtin", opt.builtin, "Built-in polygon")
                   ->check(CLI::IsMember(builtin_names()));
    auto* dir = sub->add_option("--input-dir", opt.input_dir, "Process every *.json file in a directory");
    in->excludes(bi)->excludes(dir);
    bi->excludes(dir);
    if (with_group) sub->add_option("--group", opt.group, "auto | reflection:<k> | dihedral:<i>,<j>");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", opt.output, "Write to a file instead of stdout");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Edges, normals, offsets and adjacency");
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers and Poincare pairing");
  auto* sym_cmd = app.add_subcommand("symmetries", "Detected reflections and maximal dihedral groups");
  auto* verify_cmd = app.add_subcommand("verify", "Certify the isomorphism with the invariant ring");
  auto* root_cmd = app.add_subcommand("rootdemo", "Weight polygons of rank-2 root systems");
  add_input(analyze_cmd, false);
  add_input(betti_cmd, true);
  add_input(sym_cmd, false);
  add_input(verify_cmd, true);
  for (auto* sub : {analyze_cmd, betti_cmd, sym_cmd, verify_cmd, root_cmd}) add_output(sub);
  root_cmd->add_option("--type", opt.root_type, "A2, B2, C2 or G2");
  root_cmd->add_option("--offset", opt.offset, "Scale factor p/q applied to the default offsets");
  root_cmd->add_option("--offsets", opt.offsets, "Explicit offsets a,b for the omega_2 and omega_1 families");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const bool group_given = betti_cmd->parsed() && betti_cmd->count("--group") > 0;

  try {
    if (root_cmd->parsed()) {
      const Outcome o = rootdemo(opt);
      const int io = emit(opt, o.json, o.text, out, err);
      return io != kExitOk ? io : o.code;
    }
    std::function<Outcome(const NamedPolygon&)> command;
    if (analyze_cmd->parsed()) command = analyze;
    if (betti_cmd->parsed()) command = [&](const NamedPolygon& np) { return betti(np, opt, group_given); };
    if (sym_cmd->parsed()) command = symmetries;
    if (verify_cmd->parsed()) command = [&](const NamedPolygon& np) { return verify(np, opt); };

    if (!opt.input_dir.empty()) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(opt.input_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      int code = kExitOk;
      Json all = Json::array();
      std::string text;
      for (const auto& f : files) {
        try {
          const Outcome o = command(load_polygon_file(f.string()));
          all.push_back({{"file", f.filename().string()}, {"result", o.json}});
          text += "== " + f.filename().string() + "\n" + o.text;
          code = std::max(code, o.code);
        } catch (const Error& e) {
          all.push_back({{"file", f.filename().string()}, {"error", e.what()}});
          text += "== " + f.filename().string() + "\nerror: " + e.what() + "\n";
          code = kExitInputError;
        }
      }
      const int io = emit(opt, all, text, out, err);
      return io != kExitOk ? io : code;
    }
    if (opt.input.empty() && opt.builtin.empty()) {
      err << "error: one of --input, --builtin or --input-dir is required\n";
      return kExitInputError;
    }
    const NamedPolygon np = opt.input.empty() ? builtin_polygon(opt.builtin) : load_polygon_file(opt.input);
    const Outcome o = command(np);
    const int io = emit(opt, o.json, o.text, out, err);
    return io != kExitOk ? io : o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace toricmirror
