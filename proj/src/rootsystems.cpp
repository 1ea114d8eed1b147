#include "toricmirror/rootsystems.hpp"

#include <algorithm>
#include <cctype>

#include "toricmirror/errors.hpp"

namespace toricmirror {
namespace {

Mat2 coweight_reflection(const std::array<std::array<int, 2>, 2>& a, std::size_t i) {
  // omega_j -> omega_j - delta_ij alpha_i^vee; column j is the image of omega_j.
  Mat2 m = Mat2::identity();
  const Rat ai0 = a[i][0];
  const Rat ai1 = a[i][1];
  if (i == 0) {
    m.a -= ai0;
    m.c -= ai1;
  } else {
    m.b -= ai0;
    m.d -= ai1;
  }
  return m;
}

std::vector<Rat> row_over(const std::vector<std::vector<Rat>>& table, const std::vector<std::size_t>& reps,
                          std::size_t j) {
  std::vector<Rat> out;
  for (std::size_t u : reps) out.push_back(table.at(u).at(j));
  return out;
}

std::vector<Rat> rats(std::initializer_list<int> values) {
  std::vector<Rat> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace

std::string root_type_name(RootType type) {
  switch (type) {
    case RootType::kA2: return "A2";
    case RootType::kB2: return "B2";
    case RootType::kC2: return "C2";
    case RootType::kG2: return "G2";
  }
  return "?";
}

RootType parse_root_type(std::string_view text) {
  std::string upper(text);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (RootType t : {RootType::kA2, RootType::kB2, RootType::kC2, RootType::kG2})
    if (upper == root_type_name(t)) return t;
  throw Error(ErrorKind::kInvalidInput, "unknown root system \"" + std::string(text) + "\"");
}

RootSystemRank2 root_system(RootType type) {
  RootSystemRank2 rs;
  rs.type = type;
  switch (type) {
    case RootType::kA2: rs.cartan = {{{2, -1}, {-1, 2}}}; break;
    case RootType::kB2: rs.cartan = {{{2, -1}, {-2, 2}}}; break;
    case RootType::kC2: rs.cartan = {{{2, -2}, {-1, 2}}}; break;
    case RootType::kG2: rs.cartan = {{{2, -3}, {-1, 2}}}; break;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    rs.simple_coroots[i] = {rs.cartan[i][0], rs.cartan[i][1]};
    rs.weyl_on_coweights[i] = coweight_reflection(rs.cartan, i);
    rs.weyl_on_roots[i] = rs.weyl_on_coweights[i].transpose();
  }
  return rs;
}

ReflectionGroup weyl_group(const RootSystemRank2& rs) {
  const Reflection s1{rs.weyl_on_roots[0], mirror_normal_of(rs.weyl_on_roots[0])};
  const Reflection s2{rs.weyl_on_roots[1], mirror_normal_of(rs.weyl_on_roots[1])};
  return dihedral_group(s1, s2);
}

WeightOffsets default_offsets(const RootSystemRank2& rs) {
  // rho = A^{-1} (1, 1) in alpha-coordinates.
  const Mat2 a{rs.cartan[0][0], rs.cartan[0][1], rs.cartan[1][0], rs.cartan[1][1]};
  const RatPoint rho = a.inverse() * RatPoint{1, 1};
  return {-rho.y, -rho.x};
}

RationalPolygon weight_polytope(const RootSystemRank2& rs, const WeightOffsets& offsets) {
  if (offsets.a >= 0 || offsets.b >= 0) throw Error(ErrorKind::kDegenerateOffsets, "offsets must be negative");
  const ReflectionGroup w = weyl_group(rs);
  std::vector<Halfspace> hs;
  auto add_orbit = [&](const LatticeVec& omega, const Rat& offset) {
    for (const auto& e : w.elements()) {
      const LatticeVec n = act_on_normal(e.matrix, omega);
      const bool seen = std::any_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.normal == n; });
      if (!seen) hs.push_back({n, offset});
    }
  };
  add_orbit({0, 1}, offsets.a);
  add_orbit({1, 0}, offsets.b);
  try {
    return polygon_from_halfspaces(hs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kRedundantHalfspace || e.kind() == ErrorKind::kUnbounded) {
      throw Error(ErrorKind::kDegenerateOffsets, std::string("offsets ") + to_string(offsets.a) + ", " +
                                                     to_string(offsets.b) + " do not give every half-plane an edge");
    }
    throw;
  }
}

GoldenTable g2_golden_table(const RootSystemRank2& rs) {
  if (rs.type != RootType::kG2) throw Error(ErrorKind::kInvalidInput, "golden table exists for G2 only");
  const RationalPolygon p = weight_polytope(rs, default_offsets(rs));
  const ReflectionGroup w = weyl_group(rs);
  const FundamentalRegion region = fundamental_region(p, w);
  GoldenTable out;
  out.table = coefficients(p, w, region);
  for (std::size_t u : w.coset_reps(0)) out.s1_reps.push_back(w.element_name(u));
  for (std::size_t u : w.coset_reps(1)) out.s2_reps.push_back(w.element_name(u));
  const std::size_t last = region.inherited.size() - 1;
  out.c1 = row_over(out.table.c, w.coset_reps(0), 0);
  out.d1 = row_over(out.table.d, w.coset_reps(0), 0);
  out.c2 = row_over(out.table.c, w.coset_reps(1), last);
  out.d2 = row_over(out.table.d, w.coset_reps(1), last);
  return out;
}

GoldenTable g2_reference_table() {
  GoldenTable t;
  t.s1_reps = {"id", "s2", "s1s2", "s2s1s2", "s1s2s1s2", "s2s1s2s1s2"};
  t.s2_reps = {"id", "s1", "s2s1", "s1s2s1", "s2s1s2s1", "s1s2s1s2s1"};
  t.c1 = rats({0, 0, 1, 1, 2, 2});
  t.d1 = rats({0, 1, 1, 3, 3, 4});
  t.c2 = rats({0, 1, 1, 3, 3, 4});
  t.d2 = rats({0, 0, 3, 3, 6, 6});
  return t;
}

}  // namespace toricmirror
