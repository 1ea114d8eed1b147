#include "toricmirror/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "toricmirror/errors.hpp"

namespace toricmirror {

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) { return {a.x + b.x, a.y + b.y}; }
LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) { return {a.x - b.x, a.y - b.y}; }
LatticeVec operator-(const LatticeVec& a) { return {-a.x, -a.y}; }

std::string to_string(const LatticeVec& v) { return "(" + v.x.str() + "," + v.y.str() + ")"; }

RatPoint operator+(const RatPoint& a, const RatPoint& b) { return {a.x + b.x, a.y + b.y}; }
RatPoint operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
RatPoint operator*(const Rat& s, const RatPoint& p) { return {s * p.x, s * p.y}; }

std::string to_string(const RatPoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

Rat cross(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }
Rat dot(const RatPoint& a, const RatPoint& b) { return a.x * b.x + a.y * b.y; }

Rat pairing(const RatPoint& m, const LatticeVec& n) { return m.x * Rat(n.x) + m.y * Rat(n.y); }

LatticeVec primitive(const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw Error(ErrorKind::kZeroVector, "primitive() of the zero vector");
  const Integer g = gcd(abs(x), abs(y));
  return {x / g, y / g};
}

LatticeVec primitive(const LatticeVec& v) { return primitive(v.x, v.y); }

LatticeVec primitive_direction(const RatPoint& v) {
  const Integer dx = denominator_of(v.x);
  const Integer dy = denominator_of(v.y);
  const Integer l = lcm(dx, dy);
  return primitive(numerator_of(v.x) * (l / dx), numerator_of(v.y) * (l / dy));
}

Integer det(const LatticeVec& a, const LatticeVec& b) { return a.x * b.y - a.y * b.x; }

bool angle_less(const RatPoint& a, const RatPoint& b) {
  const auto half = [](const RatPoint& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  const int ha = half(a);
  const int hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

Mat2 Mat2::inverse() const {
  const Rat dt = det();
  if (dt == 0) throw Error(ErrorKind::kInvalidInput, "singular 2x2 matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

bool Mat2::is_integral() const {
  return toricmirror::is_integral(a) && toricmirror::is_integral(b) && toricmirror::is_integral(c) &&
         toricmirror::is_integral(d);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

RatPoint operator*(const Mat2& m, const RatPoint& p) { return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y}; }

std::string to_string(const Mat2& m) {
  return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," + to_string(m.d) + "]]";
}

std::vector<Halfspace> RationalPolygon::halfspaces() const {
  std::vector<Halfspace> hs;
  hs.reserve(edges_.size());
  for (const auto& e : edges_) hs.push_back({e.normal, e.offset});
  return hs;
}

std::size_t RationalPolygon::edge_with_normal(const LatticeVec& normal) const {
  for (const auto& e : edges_)
    if (e.normal == normal) return e.index;
  return edges_.size();
}

Rat RationalPolygon::area() const {
  Rat twice = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    twice += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  return twice / 2;
}

RationalPolygon polygon_from_vertices(const std::vector<RatPoint>& pts, OriginPolicy policy) {
  const std::size_t m = pts.size();
  if (m < 3) throw Error(ErrorKind::kInvalidInput, "a polygon needs at least 3 vertices");

  Rat twice_area = 0;
  for (std::size_t i = 0; i < m; ++i) twice_area += cross(pts[i], pts[(i + 1) % m]);
  if (twice_area == 0) throw Error(ErrorKind::kCollinearTriple, "vertices are collinear");

  std::vector<RatPoint> v = pts;
  if (twice_area < 0) std::reverse(v.begin(), v.end());

  std::vector<RatPoint> dirs(m);
  for (std::size_t i = 0; i < m; ++i) dirs[i] = v[(i + 1) % m] - v[i];

  for (std::size_t i = 0; i < m; ++i) {
    const Rat turn = cross(dirs[i], dirs[(i + 1) % m]);
    if (turn == 0) {
      throw Error(ErrorKind::kCollinearTriple,
                  "vertices " + to_string(v[i]) + ", " + to_string(v[(i + 1) % m]) + ", " +
                      to_string(v[(i + 2) % m]) + " are collinear");
    }
    if (turn < 0) throw Error(ErrorKind::kNotConvex, "reflex turn at vertex " + to_string(v[(i + 1) % m]));
  }
  // All left turns still allow a self-intersecting star; a simple convex
  // polygon turns through exactly one full revolution.
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (angle_less(dirs[(i + 1) % m], dirs[i])) ++wraps;
  if (wraps != 1) throw Error(ErrorKind::kNotConvex, "boundary winds more than once");

  RationalPolygon poly;
  poly.vertices_ = std::move(v);
  poly.edges_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Edge e;
    e.index = i;
    e.start = poly.vertices_[i];
    e.end = poly.vertices_[(i + 1) % m];
    e.normal = primitive_direction(RatPoint{dirs[i].y, -dirs[i].x});
    e.offset = -pairing(e.start, e.normal);
    const bool ok = policy == OriginPolicy::kStrictInterior ? e.offset < 0 : e.offset <= 0;
    if (!ok) {
      throw Error(ErrorKind::kOriginNotInterior,
                  "origin is not inside the polygon (edge " + std::to_string(i) + " has offset " +
                      to_string(e.offset) + ")");
    }
    poly.edges_.push_back(std::move(e));
  }
  return poly;
}

RationalPolygon polygon_from_halfspaces(const std::vector<Halfspace>& hs) {
  const std::size_t k = hs.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (hs[i].normal.is_zero()) throw Error(ErrorKind::kZeroVector, "half-space with zero normal");
    if (!(primitive(hs[i].normal) == hs[i].normal)) {
      throw Error(ErrorKind::kInvalidInput, "normal " + to_string(hs[i].normal) + " is not primitive");
    }
    if (hs[i].offset >= 0) {
      throw Error(ErrorKind::kOriginNotInterior, "offset " + to_string(hs[i].offset) + " is not negative");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (hs[j].normal == hs[i].normal)
        throw Error(ErrorKind::kRedundantHalfspace, "normal " + to_string(hs[i].normal) + " appears twice");
  }
  if (k < 3) throw Error(ErrorKind::kUnbounded, "fewer than three half-planes");

  struct Segment {
    std::size_t source;
    RatPoint start;
    RatPoint end;
  };
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < k; ++i) {
    const LatticeVec& n = hs[i].normal;
    const Rat norm2 = Rat(n.x * n.x + n.y * n.y);
    const RatPoint p0{-hs[i].offset * Rat(n.x) / norm2, -hs[i].offset * Rat(n.y) / norm2};
    const RatPoint d{Rat(-n.y), Rat(n.x)};
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    bool empty = false;
    for (std::size_t j = 0; j < k && !empty; ++j) {
      if (j == i) continue;
      const Rat s = pairing(d, hs[j].normal);
      const Rat r = -hs[j].offset - pairing(p0, hs[j].normal);
      if (s == 0) {
        if (r < 0) empty = true;
        continue;
      }
      const Rat t = r / s;
      if (s > 0) {
        if (!hi || t < *hi) hi = t;
      } else {
        if (!lo || t > *lo) lo = t;
      }
    }
    if (empty || (lo && hi && *lo >= *hi)) {
      throw Error(ErrorKind::kRedundantHalfspace,
                  "half-plane with normal " + to_string(n) + " does not support an edge");
    }
    if (!lo || !hi) throw Error(ErrorKind::kUnbounded, "intersection of half-planes is unbounded");
    segments.push_back({i, p0 + (*lo) * d, p0 + (*hi) * d});
  }

  std::sort(segments.begin(), segments.end(), [&](const Segment& a, const Segment& b) {
    const auto& na = hs[a.source].normal;
    const auto& nb = hs[b.source].normal;
    return angle_less(RatPoint{Rat(na.x), Rat(na.y)}, RatPoint{Rat(nb.x), Rat(nb.y)});
  });
  std::vector<RatPoint> vertices;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!(segments[i].end == segments[(i + 1) % segments.size()].start)) {
      throw Error(ErrorKind::kInvalidInput, "half-plane edges do not close up");
    }
    vertices.push_back(segments[i].start);
  }
  return polygon_from_vertices(vertices, OriginPolicy::kStrictInterior);
}

bool adjacent(const RationalPolygon& p, std::size_t i, std::size_t j) {
  const std::size_t m = p.size();
  const std::size_t d = (i + m - j) % m;
  return d == 0 || d == 1 || d == m - 1;
}

}  // namespace toricmirror
