#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "support.hpp"
#include "toricmirror/errors.hpp"
#include "toricmirror/rootsystems.hpp"

using namespace toricmirror;
using toricmirror::testing::corpus;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParse;
}

/// Vertex enumeration: intersect every pair of boundary lines, keep the
/// feasible points, and count the lines that carry two distinct ones.
std::size_t enumerated_edge_count(const std::vector<Halfspace>& hs) {
  std::vector<std::set<std::pair<Rat, Rat>>> on_line(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const Rat a = Rat(hs[i].normal.x), b = Rat(hs[i].normal.y);
      const Rat c = Rat(hs[j].normal.x), d = Rat(hs[j].normal.y);
      const Rat det = a * d - b * c;
      if (det == 0) continue;
      // a x + b y = -offset_i, c x + d y = -offset_j
      const Rat x = (-hs[i].offset * d + hs[j].offset * b) / det;
      const Rat y = (-a * hs[j].offset + c * hs[i].offset) / det;
      bool feasible = true;
      for (const auto& h : hs) feasible = feasible && pairing({x, y}, h.normal) + h.offset <= 0;
      if (!feasible) continue;
      on_line[i].insert({x, y});
      on_line[j].insert({x, y});
    }
  }
  return static_cast<std::size_t>(std::count_if(on_line.begin(), on_line.end(), [](const auto& s) { return s.size() >= 2; }));
}

std::vector<LatticeVec> normals(const RationalPolygon& p) {
  std::vector<LatticeVec> out;
  for (const auto& e : p.edges()) out.push_back(e.normal);
  return out;
}

}  // namespace

TEST_CASE("square from vertices") {
  const auto p = polygon_from_vertices({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  REQUIRE(p.size() == 4);
  std::vector<LatticeVec> expected{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  auto got = normals(p);
  // The starting edge is a free choice; compare as a cyclic sequence.
  const auto start = std::find(got.begin(), got.end(), expected[0]);
  REQUIRE(start != got.end());
  std::rotate(got.begin(), start, got.end());
  CHECK(got == expected);
  for (const auto& e : p.edges()) CHECK(e.offset == -1);
  CHECK(p.area() == 4);
}

TEST_CASE("triangle from vertices") {
  const auto p = polygon_from_vertices({{2, -1}, {-1, 2}, {-1, -1}});
  const auto ns = normals(p);
  REQUIRE(ns.size() == 3);
  for (const LatticeVec& n : std::vector<LatticeVec>{{1, 1}, {-1, 0}, {0, -1}}) {
    CHECK(std::find(ns.begin(), ns.end(), n) != ns.end());
  }
}

TEST_CASE("orientation is normalized") {
  const auto ccw = polygon_from_vertices({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  const auto cw = polygon_from_vertices({{1, -1}, {-1, -1}, {-1, 1}, {1, 1}});
  auto a = normals(ccw);
  auto b = normals(cw);
  std::rotate(b.begin(), std::find(b.begin(), b.end(), a[0]), b.end());
  CHECK(a == b);
}

TEST_CASE("invalid vertex lists") {
  CHECK(kind_of([] { polygon_from_vertices({{1, 1}, {-1, 1}, {0, 0}, {-1, -1}, {1, -1}}); }) == ErrorKind::kNotConvex);
  CHECK(kind_of([] { polygon_from_vertices({{1, 1}, {0, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }) ==
        ErrorKind::kCollinearTriple);
  CHECK(kind_of([] { polygon_from_vertices({{1, 1}, {3, 1}, {3, 3}, {1, 3}}); }) == ErrorKind::kOriginNotInterior);
  CHECK(kind_of([] { polygon_from_vertices({{1, 0}, {0, 1}, {-1, -1}, {0, 0}}); }) != ErrorKind::kParse);
}

TEST_CASE("square from half-spaces") {
  const auto p = polygon_from_halfspaces({{{1, 0}, -1}, {{0, 1}, -1}, {{-1, 0}, -1}, {{0, -1}, -1}});
  std::set<std::pair<Rat, Rat>> verts;
  for (const auto& v : p.vertices()) verts.insert({v.x, v.y});
  CHECK(verts == std::set<std::pair<Rat, Rat>>{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
}

TEST_CASE("half-space errors") {
  std::vector<Halfspace> sq{{{1, 0}, -1}, {{0, 1}, -1}, {{-1, 0}, -1}, {{0, -1}, -1}};
  auto dup = sq;
  dup.push_back(sq[0]);
  CHECK(kind_of([&] { polygon_from_halfspaces(dup); }) == ErrorKind::kRedundantHalfspace);
  CHECK(kind_of([] { polygon_from_halfspaces({{{1, 0}, -1}, {{0, 1}, -1}, {{-1, 0}, -1}}); }) == ErrorKind::kUnbounded);
  CHECK(kind_of([] { polygon_from_halfspaces({{{1, 0}, 1}, {{0, 1}, -1}, {{-1, 0}, -3}, {{0, -1}, -1}}); }) ==
        ErrorKind::kOriginNotInterior);
}

TEST_CASE("G2 half-spaces against a vertex enumeration oracle") {
  const auto rs = root_system(RootType::kG2);
  const auto p = weight_polytope(rs, default_offsets(rs));
  CHECK(p.size() == 12);
  CHECK(enumerated_edge_count(p.halfspaces()) == 12);

  // Uniform offsets -1 on both families: the omega_2 family is cut away.
  auto uniform = p.halfspaces();
  for (auto& h : uniform) h.offset = -1;
  CHECK(enumerated_edge_count(uniform) == 6);
  CHECK(kind_of([&] { polygon_from_halfspaces(uniform); }) == ErrorKind::kRedundantHalfspace);
}

TEST_CASE("pairing and primitive") {
  CHECK(pairing({1, 0}, {0, 1}) == 0);
  CHECK(pairing({2, 3}, {1, 1}) == 5);
  CHECK(pairing({Rat(1, 2), Rat(2, 3)}, {3, 5}) == Rat(3, 2) + Rat(10, 3));
  CHECK(primitive(4, -6) == LatticeVec{2, -3});
  CHECK(primitive(0, 5) == LatticeVec{0, 1});
  CHECK(primitive(-3, -3) == LatticeVec{-1, -1});
  CHECK(kind_of([] { primitive(0, 0); }) == ErrorKind::kZeroVector);
}

TEST_CASE("adjacency examples") {
  const auto sq = polygon_from_vertices({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  CHECK(adjacent(sq, 0, 1));
  CHECK_FALSE(adjacent(sq, 0, 2));
  const auto tri = polygon_from_vertices({{2, -1}, {-1, 2}, {-1, -1}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(adjacent(tri, i, j));
  const auto rs = root_system(RootType::kG2);
  CHECK_FALSE(adjacent(weight_polytope(rs, default_offsets(rs)), 0, 6));
}

TEST_CASE("polygon invariants over the corpus") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.name);
    const RationalPolygon& p = entry.polygon;
    const std::size_t m = p.size();
    RatPoint closure{0, 0};
    for (const auto& e : p.edges()) {
      CHECK(e.offset < 0);
      CHECK(primitive(e.normal) == e.normal);
      CHECK(pairing(e.start, e.normal) + e.offset == 0);
      CHECK(pairing(e.end, e.normal) + e.offset == 0);
      for (const auto& v : p.vertices()) {
        if (v == e.start || v == e.end) continue;
        CHECK(pairing(v, e.normal) + e.offset < 0);
      }
      // Edge vector = (normal rotated by +90 degrees) times lattice length.
      const RatPoint dir = e.end - e.start;
      const RatPoint rotated{Rat(-e.normal.y), Rat(e.normal.x)};
      const Rat length = rotated.x != 0 ? dir.x / rotated.x : dir.y / rotated.y;
      CHECK(length > 0);
      CHECK(length * rotated == dir);
      closure = closure + length * rotated;
    }
    CHECK(closure == RatPoint{0, 0});
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(det(p.edge(i).normal, p.edge((i + 1) % m).normal) > 0);
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t d = i > j ? i - j : j - i;
        CHECK(adjacent(p, i, j) == (d == 0 || d == 1 || d == m - 1));
      }
    }
    const auto back = polygon_from_halfspaces(p.halfspaces());
    CHECK(back.vertices().size() == m);
    CHECK(back.halfspaces().size() == m);
    std::set<std::pair<Rat, Rat>> a, b;
    for (const auto& v : p.vertices()) a.insert({v.x, v.y});
    for (const auto& v : back.vertices()) b.insert({v.x, v.y});
    CHECK(a == b);
  }
}
