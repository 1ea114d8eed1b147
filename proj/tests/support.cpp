#include "support.hpp"

#include <algorithm>
#include <random>

#include "toricmirror/errors.hpp"
#include "toricmirror/io.hpp"

namespace toricmirror::testing {
namespace {

bool origin_strictly_inside(const std::vector<RatPoint>& hull) {
  if (hull.size() < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatPoint& a = hull[i];
    const RatPoint& b = hull[(i + 1) % hull.size()];
    if (cross(b - a, RatPoint{0, 0} - a) <= 0) return false;
  }
  return true;
}

Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace

std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatPoint& a, const RatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RatPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

RationalPolygon random_polygon(std::uint32_t seed, int radius, bool rational) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_int_distribution<int> count(3, 9);
  std::uniform_int_distribution<int> den(1, 4);
  for (;;) {
    std::vector<RatPoint> pts;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const Rat d = rational ? den(rng) : 1;
      pts.push_back({Rat(coord(rng)) / d, Rat(coord(rng)) / d});
    }
    const auto hull = convex_hull(pts);
    if (hull.size() >= 3 && hull.size() <= 12 && origin_strictly_inside(hull)) return polygon_from_vertices(hull);
  }
}

RationalPolygon random_symmetric_polygon(std::uint32_t seed, int radius) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_int_distribution<int> count(2, 5);
  for (;;) {
    std::vector<RatPoint> pts;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const RatPoint q{coord(rng), coord(rng)};
      pts.push_back(q);
      pts.push_back(Rat(-1) * q);
    }
    const auto hull = convex_hull(pts);
    if (hull.size() >= 4 && hull.size() <= 12 && origin_strictly_inside(hull)) return polygon_from_vertices(hull);
  }
}

RationalPolygon random_mirror_polygon(std::uint32_t seed, int radius) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_int_distribution<int> height(0, radius);
  std::uniform_int_distribution<int> count(2, 5);
  for (;;) {
    std::vector<RatPoint> pts;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const RatPoint q{coord(rng), height(rng)};
      pts.push_back(q);
      pts.push_back({q.x, -q.y});
    }
    const auto hull = convex_hull(pts);
    if (hull.size() >= 3 && hull.size() <= 12 && origin_strictly_inside(hull)) return polygon_from_vertices(hull);
  }
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& name : builtin_names()) out.push_back({name, builtin_polygon(name).polygon});
  out.push_back({"triangle", polygon_from_vertices({{2, -1}, {-1, 2}, {-1, -1}})});
  out.push_back({"thin triangle", polygon_from_vertices({{5, -1}, {-1, 1}, {-1, -2}})});
  out.push_back({"rational quadrilateral", polygon_from_vertices({{Rat(1, 2), 0}, {0, Rat(7, 3)}, {-3, 0}, {0, Rat(-2, 5)}})});
  out.push_back({"irregular pentagon", polygon_from_vertices({{3, -1}, {2, 2}, {-1, 3}, {-2, 0}, {0, -2}})});
  out.push_back({"rational heptagon", polygon_from_vertices({{Rat(5, 2), 0}, {2, Rat(3, 2)}, {0, 2}, {Rat(-3, 2), Rat(4, 3)},
                                                            {-2, 0}, {-1, Rat(-7, 4)}, {1, -2}})});
  for (std::uint32_t seed = 1; seed <= 24; ++seed) {
    out.push_back({"random lattice " + std::to_string(seed), random_polygon(seed, 6, false)});
    out.push_back({"random rational " + std::to_string(seed), random_polygon(1000 + seed, 9, true)});
  }
  for (std::uint32_t seed = 1; seed <= 8; ++seed) {
    out.push_back({"random symmetric " + std::to_string(seed), random_symmetric_polygon(seed, 7)});
  }
  return out;
}

MonomialOracle monomial_oracle(const RationalPolygon& p) {
  const std::size_t m = p.size();
  // Column index of x_i x_j with i <= j.
  std::vector<std::vector<std::size_t>> col(m, std::vector<std::size_t>(m));
  std::size_t cols = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) col[i][j] = col[j][i] = cols++;

  std::vector<RatVector> rows;
  auto cyclic_gap = [m](std::size_t i, std::size_t j) {
    const std::size_t d = i > j ? i - j : j - i;
    return std::min(d, m - d);
  };
  if (m >= 4) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (cyclic_gap(i, j) <= 1) continue;
        RatVector r(cols);
        r[col[i][j]] = 1;
        rows.push_back(r);
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (int axis = 0; axis < 2; ++axis) {
      RatVector r(cols);
      for (std::size_t i = 0; i < m; ++i) {
        const LatticeVec& n = p.edge(i).normal;
        r[col[k][i]] += Rat(axis == 0 ? n.x : n.y);
      }
      rows.push_back(r);
    }
  }
  const auto kernel = kernel_basis(RatMatrix::from_rows(rows, cols));
  MonomialOracle o;
  o.deg4_dim = kernel.size();
  if (kernel.size() != 1) return o;
  const Rat d01 = abs_rat(Rat(det(p.edge(0).normal, p.edge(1).normal)));
  const Rat scale = 1 / (kernel[0][col[0][1]] * d01);
  o.products = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) o.products(i, j) = scale * kernel[0][col[i][j]];
  return o;
}

RatMatrix intersection_numbers(const RationalPolygon& p) {
  const std::size_t m = p.size();
  RatMatrix t(m, m);
  auto l = [&](std::size_t i) { return p.edge(i % m).normal; };
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t next = (i + 1) % m;
    const std::size_t prev = (i + m - 1) % m;
    const Rat d = Rat(det(l(i), l(next)));
    t(i, next) = t(next, i) = 1 / abs_rat(d);
    t(i, i) = -Rat(det(l(prev), l(next))) / (Rat(det(l(prev), l(i))) * d);
  }
  return t;
}

std::vector<std::string> dihedral_specs(const RationalPolygon& p) {
  const auto refl = detect_reflections(p);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < refl.size(); ++i) {
    for (std::size_t j = 0; j < refl.size(); ++j) {
      if (i == j) continue;
      const std::string spec = "dihedral:" + std::to_string(i) + "," + std::to_string(j);
      try {
        group_from_spec(p, spec);
        out.push_back(spec);
      } catch (const Error&) {
      }
    }
  }
  return out;
}

std::vector<G2DifferenceLine> g2_difference_lines() {
  return {
      {"s2", {1}, 1, {1, -2}, 0, 1},
      {"s1s2", {0, 1}, 1, {-1, 1}, 1, 1},
      {"s2s1s2", {1, 0, 1}, 1, {1, -3}, 1, 3},
      {"s1s2s1s2", {0, 1, 0, 1}, 1, {-1, 0}, 2, 3},
      {"s2s1s2s1s2", {1, 0, 1, 0, 1}, 1, {0, -2}, 2, 4},
      {"s1", {0}, 2, {-2, 3}, 1, 0},
      {"s2s1", {1, 0}, 2, {1, -3}, 1, 3},
      {"s1s2s1", {0, 1, 0}, 2, {-3, 3}, 3, 3},
      {"s2s1s2s1", {1, 0, 1, 0}, 2, {0, -3}, 3, 6},
      {"s1s2s1s2s1", {0, 1, 0, 1, 0}, 2, {-2, 0}, 4, 6},
  };
}

std::vector<Instance> symmetric_instances() {
  std::vector<CorpusEntry> sources;
  for (const auto& name : builtin_names()) sources.push_back({name, builtin_polygon(name).polygon});
  for (std::uint32_t seed = 1; seed <= 12; ++seed) {
    sources.push_back({"random mirror " + std::to_string(seed), random_mirror_polygon(seed, 6)});
  }
  std::vector<Instance> out;
  for (const auto& s : sources) {
    const std::size_t count = detect_reflections(s.polygon).size();
    for (std::size_t k = 0; k < count; ++k) out.push_back({s.name, s.polygon, "reflection:" + std::to_string(k)});
    for (const auto& spec : dihedral_specs(s.polygon)) out.push_back({s.name, s.polygon, spec});
  }
  return out;
}

}  // namespace toricmirror::testing
