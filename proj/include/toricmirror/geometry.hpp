// Rational polygons in M⊗R with primitive outward normals in N.
//
// M and N carry fixed dual bases, so the pairing <m, n> is the dot product of
// coordinate vectors. A polygon is stored as the half-plane system
//   <x, normal_i> + offset_i <= 0,
// with edge i running counterclockwise from vertex i to vertex i+1.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toricmirror/rat.hpp"

namespace toricmirror {

struct LatticeVec {
  Integer x;
  Integer y;

  bool operator==(const LatticeVec&) const = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
LatticeVec operator-(const LatticeVec& a);
std::string to_string(const LatticeVec& v);

struct RatPoint {
  Rat x;
  Rat y;

  bool operator==(const RatPoint&) const = default;
};

RatPoint operator+(const RatPoint& a, const RatPoint& b);
RatPoint operator-(const RatPoint& a, const RatPoint& b);
RatPoint operator*(const Rat& s, const RatPoint& p);
std::string to_string(const RatPoint& p);

/// z-component of a × b.
Rat cross(const RatPoint& a, const RatPoint& b);
Rat dot(const RatPoint& a, const RatPoint& b);

/// Natural pairing M × N → Q.
Rat pairing(const RatPoint& m, const LatticeVec& n);

/// v divided by the gcd of its entries. Throws ZeroVector for v = 0.
LatticeVec primitive(const Integer& x, const Integer& y);
LatticeVec primitive(const LatticeVec& v);

/// Primitive integer vector with the same direction as a nonzero rational one.
LatticeVec primitive_direction(const RatPoint& v);

Integer det(const LatticeVec& a, const LatticeVec& b);

/// Exact polar-angle order on nonzero directions, starting at the positive x-axis.
bool angle_less(const RatPoint& a, const RatPoint& b);

/// Linear map of the plane in the fixed basis, acting on column vectors.
struct Mat2 {
  Rat a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Rat det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool is_integral() const;
  bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
RatPoint operator*(const Mat2& m, const RatPoint& p);
std::string to_string(const Mat2& m);

struct Halfspace {
  LatticeVec normal;
  Rat offset;

  bool operator==(const Halfspace&) const = default;
};

struct Edge {
  std::size_t index = 0;
  RatPoint start;
  RatPoint end;
  LatticeVec normal;
  Rat offset;
};

/// Where the origin must lie. User polygons need it strictly inside
/// (equivalently every offset < 0); fundamental regions have it on the boundary.
enum class OriginPolicy { kStrictInterior, kClosed };

class RationalPolygon {
 public:
  const std::vector<RatPoint>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::vector<Halfspace> halfspaces() const;

  /// Index of the edge with the given outward normal, or size() if none.
  std::size_t edge_with_normal(const LatticeVec& normal) const;

  Rat area() const;

 private:
  friend RationalPolygon polygon_from_vertices(const std::vector<RatPoint>&, OriginPolicy);

  std::vector<RatPoint> vertices_;
  std::vector<Edge> edges_;
};

/// Builds a polygon from its vertices in either orientation. Throws NotConvex,
/// CollinearTriple (a redundant inequality) or OriginNotInterior.
RationalPolygon polygon_from_vertices(const std::vector<RatPoint>& pts,
                                      OriginPolicy policy = OriginPolicy::kStrictInterior);

/// Intersection of the half-planes <x, normal> + offset <= 0. Every half-plane
/// has to contribute an edge of positive length.
RationalPolygon polygon_from_halfspaces(const std::vector<Halfspace>& hs);

/// True iff edges i and j share a vertex; an edge is adjacent to itself.
bool adjacent(const RationalPolygon& p, std::size_t i, std::size_t j);

}  // namespace toricmirror
