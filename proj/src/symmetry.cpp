#include "toricmirror/symmetry.hpp"

#include <algorithm>
#include <array>

#include "toricmirror/errors.hpp"

namespace toricmirror {
namespace {

constexpr std::size_t kMaxDihedralOrder = 64;

RatPoint as_point(const LatticeVec& v) { return {Rat(v.x), Rat(v.y)}; }

LatticeVec canonical_sign(const LatticeVec& v) {
  if (v.x < 0 || (v.x == 0 && v.y < 0)) return -v;
  return v;
}

/// Direction of the line {<x, eta> = 0}.
RatPoint line_direction(const LatticeVec& eta) { return {Rat(-eta.y), Rat(eta.x)}; }

bool strictly_inside_sector(const RatPoint& cw, const RatPoint& ccw, const RatPoint& v) {
  return cross(cw, v) > 0 && cross(v, ccw) > 0;
}

WallIncidence ray_exit(const RationalPolygon& p, std::size_t generator, const RatPoint& ray) {
  WallIncidence w;
  w.generator = generator;
  w.ray = ray;
  const auto& verts = p.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (cross(ray, verts[i]) == 0 && dot(ray, verts[i]) > 0) {
      w.through_vertex = true;
      w.index = i;
      return w;
    }
  }
  for (const auto& e : p.edges()) {
    if (cross(e.start, ray) > 0 && cross(ray, e.end) > 0) {
      w.through_vertex = false;
      w.index = e.index;
      return w;
    }
  }
  throw Error(ErrorKind::kInvalidInput, "mirror ray does not leave the polygon");
}

void require_preserves(const RationalPolygon& p, const ReflectionGroup& group) {
  for (const auto& g : group.generators()) induced_edge_permutation(p, g);
}

}  // namespace

LatticeVec act_on_normal(const Mat2& g, const LatticeVec& normal) {
  const Mat2 contra = g.inverse().transpose();
  const RatPoint image = contra * as_point(normal);
  if (!is_integral(image.x) || !is_integral(image.y)) {
    throw Error(ErrorKind::kNotASymmetry, "map does not send normal " + to_string(normal) + " to a lattice vector");
  }
  return {numerator_of(image.x), numerator_of(image.y)};
}

LatticeVec mirror_normal_of(const Mat2& r) {
  // Rows of r - I annihilate the fixed line.
  const RatPoint row0{r.a - 1, r.b};
  const RatPoint row1{r.c, r.d - 1};
  const RatPoint row = (row0.x != 0 || row0.y != 0) ? row0 : row1;
  return canonical_sign(primitive_direction(row));
}

EdgePermutation induced_edge_permutation(const RationalPolygon& p, const Mat2& g) {
  EdgePermutation perm(p.size());
  for (const auto& e : p.edges()) {
    const LatticeVec image = act_on_normal(g, e.normal);
    const std::size_t j = p.edge_with_normal(image);
    if (j == p.size()) {
      throw Error(ErrorKind::kNotASymmetry,
                  "image of edge " + std::to_string(e.index) + " is not an edge (normal " + to_string(image) + ")");
    }
    const Edge& target = p.edge(j);
    const RatPoint a = g * e.start;
    const RatPoint b = g * e.end;
    const bool same = (a == target.start && b == target.end) || (a == target.end && b == target.start);
    if (!same) {
      throw Error(ErrorKind::kNotASymmetry, "edge " + std::to_string(e.index) + " is not mapped onto an edge");
    }
    perm[e.index] = j;
  }
  return perm;
}

EdgePermutation induced_edge_permutation(const RationalPolygon& p, const Reflection& sigma) {
  return induced_edge_permutation(p, sigma.matrix);
}

std::vector<Reflection> detect_reflections(const RationalPolygon& p) {
  const auto& v = p.vertices();
  const std::size_t m = v.size();
  // A reflection reverses the cyclic order, so it is fixed by the image k of
  // vertex 0: v0 -> v_k, v1 -> v_{k-1}.
  const Mat2 basis{v[0].x, v[1].x, v[0].y, v[1].y};
  const Mat2 basis_inv = basis.inverse();
  std::vector<Reflection> out;
  for (std::size_t k = 0; k < m; ++k) {
    const RatPoint& a = v[k];
    const RatPoint& b = v[(k + m - 1) % m];
    const Mat2 sigma = Mat2{a.x, b.x, a.y, b.y} * basis_inv;
    if (sigma.det() != -1 || !(sigma * sigma).is_identity()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = sigma * v[i] == v[(k + m - i) % m];
    if (!ok) continue;
    try {
      induced_edge_permutation(p, sigma);
    } catch (const Error&) {
      continue;  // preserves the shape but not the fan
    }
    out.push_back({sigma, mirror_normal_of(sigma)});
  }
  return out;
}

std::size_t ReflectionGroup::index_of(const Mat2& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].matrix == m) return i;
  return elements_.size();
}

std::string ReflectionGroup::generator_name(std::size_t generator) const {
  if (rank() == 1) return "sigma";
  return "s" + std::to_string(generator + 1);
}

std::string ReflectionGroup::element_name(std::size_t i) const {
  const auto& word = elements_.at(i).word;
  if (word.empty()) return "id";
  std::string out;
  for (int letter : word) out += generator_name(static_cast<std::size_t>(letter));
  return out;
}

void ReflectionGroup::finish() {
  generator_elements_.clear();
  for (std::size_t g = 0; g < generators_.size(); ++g) generator_elements_.push_back(index_of(generators_[g].matrix));
  coset_reps_.assign(generators_.size(), {});
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const std::size_t j = index_of(elements_[i].matrix * generators_[g].matrix);
      if (elements_[j].length() >= elements_[i].length()) coset_reps_[g].push_back(i);
    }
    std::stable_sort(coset_reps_[g].begin(), coset_reps_[g].end(),
                     [&](std::size_t x, std::size_t y) { return elements_[x].length() < elements_[y].length(); });
  }
}

ReflectionGroup single_reflection_group(const Reflection& sigma) {
  ReflectionGroup w;
  w.generators_ = {sigma};
  w.ell_ = 1;
  w.elements_ = {{{}, Mat2::identity()}, {{0}, sigma.matrix}};
  w.finish();
  return w;
}

ReflectionGroup dihedral_group(const Reflection& s1, const Reflection& s2) {
  if (s1.matrix == s2.matrix) throw Error(ErrorKind::kEllTooSmall, "the two generators coincide");
  const Mat2 rotation = s1.matrix * s2.matrix;
  Mat2 power = rotation;
  std::size_t ell = 1;
  while (!power.is_identity()) {
    if (++ell > kMaxDihedralOrder) throw Error(ErrorKind::kNotFiniteOrder, "s1*s2 has no finite order");
    power = power * rotation;
  }
  if (ell < 2) throw Error(ErrorKind::kEllTooSmall, "order of s1*s2 is below 2");

  ReflectionGroup w;
  w.generators_ = {s1, s2};
  w.ell_ = ell;
  w.elements_.push_back({{}, Mat2::identity()});
  const std::array<Mat2, 2> gens{s1.matrix, s2.matrix};
  for (std::size_t len = 1; len <= ell; ++len) {
    for (int first = 0; first < 2; ++first) {
      if (len == ell && first == 1) break;  // the longest element has two words
      GroupElement e{{}, Mat2::identity()};
      int letter = first;
      for (std::size_t k = 0; k < len; ++k) {
        e.word.push_back(letter);
        e.matrix = e.matrix * gens[static_cast<std::size_t>(letter)];
        letter = 1 - letter;
      }
      w.elements_.push_back(std::move(e));
    }
  }
  w.finish();
  return w;
}

ReflectionGroup auto_group(const RationalPolygon& p) {
  const auto refl = detect_reflections(p);
  if (refl.empty()) throw Error(ErrorKind::kNotASymmetry, "polygon has no reflection symmetry");
  if (refl.size() == 1) return single_reflection_group(refl[0]);
  std::optional<ReflectionGroup> best;
  for (std::size_t i = 0; i < refl.size(); ++i) {
    for (std::size_t j = i + 1; j < refl.size(); ++j) {
      ReflectionGroup w = dihedral_group(refl[i], refl[j]);
      if (best && w.order() <= best->order()) continue;
      try {
        identity_chamber(w);
      } catch (const Error&) {
        continue;
      }
      best = std::move(w);
    }
  }
  if (!best) throw Error(ErrorKind::kOrientationAmbiguous, "no pair of mirrors bounds a chamber");
  return *best;
}

ReflectionGroup group_from_spec(const RationalPolygon& p, std::string_view spec) {
  auto parse_index = [&](std::string_view text) {
    std::size_t value = 0;
    if (text.empty()) throw Error(ErrorKind::kInvalidInput, "bad group spec \"" + std::string(spec) + "\"");
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::kInvalidInput, "bad group spec \"" + std::string(spec) + "\"");
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
  };
  if (spec == "auto") return auto_group(p);
  const auto refl = detect_reflections(p);
  auto pick = [&](std::size_t k) -> const Reflection& {
    if (k >= refl.size()) {
      throw Error(ErrorKind::kNotASymmetry, "reflection " + std::to_string(k) + " requested, polygon has " +
                                                std::to_string(refl.size()));
    }
    return refl[k];
  };
  constexpr std::string_view kReflection = "reflection:";
  constexpr std::string_view kDihedral = "dihedral:";
  if (spec.substr(0, kReflection.size()) == kReflection) {
    return single_reflection_group(pick(parse_index(spec.substr(kReflection.size()))));
  }
  if (spec.substr(0, kDihedral.size()) == kDihedral) {
    const std::string_view rest = spec.substr(kDihedral.size());
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorKind::kInvalidInput, "dihedral spec needs two indices");
    const ReflectionGroup w =
        dihedral_group(pick(parse_index(rest.substr(0, comma))), pick(parse_index(rest.substr(comma + 1))));
    identity_chamber(w);
    return w;
  }
  throw Error(ErrorKind::kInvalidInput, "unknown group spec \"" + std::string(spec) + "\"");
}

std::vector<EdgePermutation> element_permutations(const RationalPolygon& p, const ReflectionGroup& group) {
  std::vector<EdgePermutation> perms;
  perms.reserve(group.order());
  for (const auto& e : group.elements()) perms.push_back(induced_edge_permutation(p, e.matrix));
  return perms;
}

Chamber identity_chamber(const ReflectionGroup& group) {
  Chamber ch;
  if (group.rank() == 1) {
    const LatticeVec& eta = group.generators()[0].mirror_normal;
    ch.eta = {eta};
    const RatPoint d = line_direction(eta);
    ch.wall_rays = {d, Rat(-1) * d};
    return ch;
  }

  std::vector<RatPoint> mirror_dirs;
  for (const auto& e : group.elements())
    if (e.matrix.det() == -1) mirror_dirs.push_back(line_direction(mirror_normal_of(e.matrix)));

  struct Ray {
    RatPoint dir;
    std::size_t generator;
  };
  std::vector<Ray> rays;
  for (std::size_t g = 0; g < 2; ++g) {
    const RatPoint d = line_direction(group.generators()[g].mirror_normal);
    rays.push_back({d, g});
    rays.push_back({Rat(-1) * d, g});
  }
  std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return angle_less(a.dir, b.dir); });

  struct Sector {
    Ray cw;
    Ray ccw;
  };
  std::vector<Sector> valid;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const Sector s{rays[i], rays[(i + 1) % rays.size()]};
    bool empty = true;
    for (const auto& d : mirror_dirs) {
      if (strictly_inside_sector(s.cw.dir, s.ccw.dir, d) || strictly_inside_sector(s.cw.dir, s.ccw.dir, Rat(-1) * d)) {
        empty = false;
        break;
      }
    }
    if (empty) valid.push_back(s);
  }
  if (valid.empty()) throw Error(ErrorKind::kOrientationAmbiguous, "no sector between the mirrors is a chamber");

  // Preferred: s2 wall clockwise, s1 wall counterclockwise; then smallest angle.
  std::stable_sort(valid.begin(), valid.end(), [](const Sector& a, const Sector& b) {
    const bool pa = a.cw.generator == 1;
    const bool pb = b.cw.generator == 1;
    if (pa != pb) return pa;
    return angle_less(a.cw.dir, b.cw.dir);
  });
  const Sector& chosen = valid.front();
  const RatPoint interior = chosen.cw.dir + chosen.ccw.dir;
  ch.eta.resize(2);
  ch.wall_rays.resize(2);
  for (std::size_t g = 0; g < 2; ++g) {
    LatticeVec eta = group.generators()[g].mirror_normal;
    if (pairing(interior, eta) > 0) eta = -eta;
    ch.eta[g] = eta;
    ch.wall_rays[g] = chosen.cw.generator == g ? chosen.cw.dir : chosen.ccw.dir;
  }
  return ch;
}

std::string case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::kSingle11: return "1-1";
    case CaseKind::kSingle12: return "1-2";
    case CaseKind::kSingle13: return "1-3";
    case CaseKind::kDihedral21: return "2-1";
    case CaseKind::kDihedral22: return "2-2";
    case CaseKind::kDihedral23: return "2-3";
  }
  return "?";
}

SymmetryCase classify_single(const RationalPolygon& p, const Reflection& sigma) {
  induced_edge_permutation(p, sigma);
  const RatPoint d = line_direction(sigma.mirror_normal);
  SymmetryCase out;
  out.walls = {ray_exit(p, 0, d), ray_exit(p, 0, Rat(-1) * d)};
  const auto vertices = std::count_if(out.walls.begin(), out.walls.end(),
                                      [](const WallIncidence& w) { return w.through_vertex; });
  out.kind = vertices == 0 ? CaseKind::kSingle11 : vertices == 1 ? CaseKind::kSingle12 : CaseKind::kSingle13;
  return out;
}

SymmetryCase classify_dihedral(const RationalPolygon& p, const ReflectionGroup& group) {
  if (group.rank() != 2) throw Error(ErrorKind::kCaseMismatch, "classify_dihedral needs two generators");
  require_preserves(p, group);
  const Chamber ch = identity_chamber(group);
  SymmetryCase out;
  out.walls = {ray_exit(p, 0, ch.wall_rays[0]), ray_exit(p, 1, ch.wall_rays[1])};
  const auto vertices = std::count_if(out.walls.begin(), out.walls.end(),
                                      [](const WallIncidence& w) { return w.through_vertex; });
  out.kind = vertices == 0 ? CaseKind::kDihedral21 : vertices == 1 ? CaseKind::kDihedral22 : CaseKind::kDihedral23;
  return out;
}

SymmetryCase classify(const RationalPolygon& p, const ReflectionGroup& group) {
  return group.rank() == 1 ? classify_single(p, group.generators()[0]) : classify_dihedral(p, group);
}

std::string FundamentalRegion::variable_name(std::size_t region_edge, const ReflectionGroup& group) const {
  for (const auto& mirror : mirrors)
    if (mirror.region_edge == region_edge) return "x_" + group.generator_name(mirror.generator);
  for (const auto& e : inherited)
    if (e.region_edge == region_edge) return "x_" + std::to_string(e.label);
  return "x_?";
}

FundamentalRegion fundamental_region(const RationalPolygon& p, const ReflectionGroup& group) {
  require_preserves(p, group);
  FundamentalRegion region;
  region.chamber = identity_chamber(group);

  // Clip P against <x, eta_g> <= 0.
  std::vector<RatPoint> pts = p.vertices();
  for (const auto& eta : region.chamber.eta) {
    std::vector<RatPoint> next;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const RatPoint& cur = pts[i];
      const RatPoint& nxt = pts[(i + 1) % pts.size()];
      const Rat fc = pairing(cur, eta);
      const Rat fn = pairing(nxt, eta);
      if (fc <= 0) next.push_back(cur);
      if ((fc < 0 && fn > 0) || (fc > 0 && fn < 0)) next.push_back(cur + (fc / (fc - fn)) * (nxt - cur));
    }
    pts = std::move(next);
  }
  // Drop repeated and collinear points left by cuts through vertices.
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const RatPoint& prev = pts[(i + pts.size() - 1) % pts.size()];
      const RatPoint& nxt = pts[(i + 1) % pts.size()];
      if (pts[i] == prev || cross(pts[i] - prev, nxt - pts[i]) == 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  region.polygon = polygon_from_vertices(pts, OriginPolicy::kClosed);
  const RationalPolygon& r = region.polygon;
  const std::size_t mr = r.size();

  const auto perms = element_permutations(p, group);
  std::vector<std::optional<std::size_t>> mirror_of(mr);
  for (const auto& e : r.edges()) {
    for (std::size_t g = 0; g < region.chamber.eta.size(); ++g) {
      const LatticeVec& eta = region.chamber.eta[g];
      if (pairing(e.start, eta) == 0 && pairing(e.end, eta) == 0) {
        if (!(e.normal == eta)) throw Error(ErrorKind::kOrientationAmbiguous, "mirror edge has the wrong orientation");
        mirror_of[e.index] = g;
      }
    }
  }
  region.mirrors.resize(group.rank());
  std::vector<bool> seen(group.rank(), false);
  for (std::size_t i = 0; i < mr; ++i) {
    if (!mirror_of[i]) continue;
    const std::size_t g = *mirror_of[i];
    if (seen[g]) throw Error(ErrorKind::kOrientationAmbiguous, "mirror appears twice on the region boundary");
    seen[g] = true;
    region.mirrors[g] = {i, g, region.chamber.eta[g]};
  }
  for (std::size_t g = 0; g < group.rank(); ++g)
    if (!seen[g]) throw Error(ErrorKind::kOrientationAmbiguous, "mirror edge missing from the region");

  auto make_inherited = [&](std::size_t region_edge) {
    const Edge& e = r.edge(region_edge);
    InheritedEdge out;
    out.region_edge = region_edge;
    out.parent_edge = p.edge_with_normal(e.normal);
    if (out.parent_edge == p.size() || p.edge(out.parent_edge).offset != e.offset) {
      throw Error(ErrorKind::kInvalidInput, "region edge " + std::to_string(region_edge) + " has no parent edge");
    }
    const Edge& parent = p.edge(out.parent_edge);
    out.truncated = !(parent.start == e.start && parent.end == e.end);
    for (std::size_t g = 0; g < group.rank(); ++g)
      if (perms[group.generator_index(g)][out.parent_edge] == out.parent_edge) out.stabilizer = g;
    return out;
  };

  std::vector<std::size_t> chain;
  if (group.rank() == 2) {
    const std::size_t i0 = region.mirrors[0].region_edge;
    const std::size_t i1 = region.mirrors[1].region_edge;
    if ((i0 + 1) % mr != i1) {
      for (std::size_t k = (i0 + 1) % mr; k != i1; k = (k + 1) % mr) chain.push_back(k);
    } else {
      for (std::size_t k = (i1 + 1) % mr; k != i0; k = (k + 1) % mr) chain.push_back(k);
      std::reverse(chain.begin(), chain.end());
    }
    for (std::size_t k : chain) {
      if (mirror_of[k]) throw Error(ErrorKind::kOrientationAmbiguous, "mirror edges are not adjacent");
      region.inherited.push_back(make_inherited(k));
    }
    if (region.inherited.empty()) throw Error(ErrorKind::kInvalidInput, "fundamental region has no inherited edge");
    const bool first_fixed = region.inherited.front().stabilizer == std::optional<std::size_t>(0);
    const bool last_fixed = region.inherited.back().stabilizer == std::optional<std::size_t>(1);
    const std::size_t start = first_fixed ? 1 : 2;
    for (std::size_t i = 0; i < region.inherited.size(); ++i) region.inherited[i].label = start + i;
    region.n = region.inherited.back().label + (last_fixed ? 0 : 1);
  } else {
    const std::size_t i0 = region.mirrors[0].region_edge;
    for (std::size_t k = (i0 + 1) % mr; k != i0; k = (k + 1) % mr) chain.push_back(k);
    std::vector<InheritedEdge> moving;
    std::vector<InheritedEdge> fixed;
    for (std::size_t k : chain) {
      InheritedEdge e = make_inherited(k);
      (e.stabilizer ? fixed : moving).push_back(e);
    }
    const std::size_t n = moving.size();
    for (std::size_t i = 0; i < n; ++i) moving[i].label = i + 1;
    if (fixed.size() == 1) {
      fixed[0].label = 2 * n + 1;
    } else if (fixed.size() == 2) {
      // Boundary order: E_{2n+2}, E_1, ..., E_n, E_{2n+1}.
      fixed[0].label = 2 * n + 2;
      fixed[1].label = 2 * n + 1;
      std::swap(fixed[0], fixed[1]);
    } else if (fixed.size() > 2) {
      throw Error(ErrorKind::kInvalidInput, "more than two sigma-fixed edges");
    }
    region.n = n;
    region.inherited = moving;
    region.inherited.insert(region.inherited.end(), fixed.begin(), fixed.end());
  }
  return region;
}

std::string OrbitDecomposition::edge_name(std::size_t edge, const ReflectionGroup& group,
                                          const FundamentalRegion& region) const {
  const Label& l = label_of_edge.at(edge);
  const std::string base = "E" + std::to_string(region.inherited.at(l.inherited).label);
  if (l.element == group.identity_index()) return base;
  return group.element_name(l.element) + "(" + base + ")";
}

OrbitDecomposition orbit_decomposition(const RationalPolygon& p, const ReflectionGroup& group,
                                       const FundamentalRegion& region) {
  const auto perms = element_permutations(p, group);
  OrbitDecomposition out;
  std::vector<std::optional<OrbitDecomposition::Label>> labels(p.size());
  for (std::size_t j = 0; j < region.inherited.size(); ++j) {
    const InheritedEdge& e = region.inherited[j];
    std::vector<std::size_t> elements;
    if (e.stabilizer) {
      elements = group.coset_reps(*e.stabilizer);
    } else {
      for (std::size_t u = 0; u < group.order(); ++u) elements.push_back(u);
    }
    std::vector<std::size_t> edges;
    for (std::size_t u : elements) {
      const std::size_t target = perms[u][e.parent_edge];
      if (labels[target]) {
        throw Error(ErrorKind::kPartitionFailure, "edge " + std::to_string(target) + " receives two orbit labels");
      }
      labels[target] = OrbitDecomposition::Label{u, j};
      edges.push_back(target);
    }
    out.orbit_elements.push_back(std::move(elements));
    out.orbit_edges.push_back(std::move(edges));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!labels[i]) throw Error(ErrorKind::kPartitionFailure, "edge " + std::to_string(i) + " is in no orbit");
    out.label_of_edge.push_back(*labels[i]);
  }
  return out;
}

bool CoeffTable::all_integral() const {
  for (const auto* table : {&c, &d})
    for (const auto& row : *table)
      for (const auto& x : row)
        if (!is_integral(x)) return false;
  return true;
}

CoeffTable coefficients(const RationalPolygon& p, const ReflectionGroup& group, const FundamentalRegion& region) {
  const auto perms = element_permutations(p, group);
  const auto& eta = region.chamber.eta;
  CoeffTable table;
  table.rank = group.rank();
  const std::size_t n = region.inherited.size();
  table.c.assign(group.order(), std::vector<Rat>(n));
  if (table.rank == 2) table.d.assign(group.order(), std::vector<Rat>(n));

  const Rat det12 = table.rank == 2 ? Rat(det(eta[0], eta[1])) : Rat(0);
  if (table.rank == 2 && det12 == 0) {
    throw Error(ErrorKind::kInconsistentGeometry, "mirror normals are linearly dependent");
  }
  for (std::size_t u = 0; u < group.order(); ++u) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t parent = region.inherited[j].parent_edge;
      const LatticeVec diff = p.edge(perms[u][parent]).normal - p.edge(parent).normal;
      if (table.rank == 2) {
        // Cramer's rule for diff = c*eta1 + d*eta2.
        table.c[u][j] = Rat(det(diff, eta[1])) / det12;
        table.d[u][j] = Rat(det(eta[0], diff)) / det12;
      } else {
        const Rat c = eta[0].x != 0 ? Rat(diff.x) / Rat(eta[0].x) : Rat(diff.y) / Rat(eta[0].y);
        if (c * Rat(eta[0].x) != Rat(diff.x) || c * Rat(eta[0].y) != Rat(diff.y)) {
          throw Error(ErrorKind::kInconsistentGeometry,
                      "normal difference " + to_string(diff) + " is not parallel to the mirror normal");
        }
        table.c[u][j] = c;
      }
    }
  }
  return table;
}

}  // namespace toricmirror
