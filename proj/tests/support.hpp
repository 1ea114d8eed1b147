// Shared test fixtures: a polygon corpus, seeded random polygon generators and
// independent oracles that never call into the cohomology module.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricmirror/geometry.hpp"
#include "toricmirror/matrix.hpp"
#include "toricmirror/symmetry.hpp"

namespace toricmirror::testing {

struct CorpusEntry {
  std::string name;
  RationalPolygon polygon;
};

/// Hand-written polygons plus seeded random ones, 3 <= m <= 12.
std::vector<CorpusEntry> corpus();

/// Convex hull of random lattice points in [-radius, radius]^2, origin strictly
/// inside, optionally with vertices divided by small denominators.
RationalPolygon random_polygon(std::uint32_t seed, int radius, bool rational);
/// Centrally symmetric random polygon (always has x -> -x, rarely a reflection).
RationalPolygon random_symmetric_polygon(std::uint32_t seed, int radius);
/// Random polygon with the mirror y = 0: a convex chain above the axis and its
/// reflection below.
RationalPolygon random_mirror_polygon(std::uint32_t seed, int radius);

/// Strict convex hull (no collinear points), counterclockwise.
std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts);

/// Degree-4 data from a full monomial elimination: all degree-2 monomials
/// modulo SR monomials and x_k * (linear form), built straight from normals.
struct MonomialOracle {
  std::size_t deg4_dim = 0;
  /// Value of the point-class functional on x_i x_j, normalized so that
  /// x_0 x_1 = 1/|det(lambda_0, lambda_1)|.
  RatMatrix products;
};
MonomialOracle monomial_oracle(const RationalPolygon& p);

/// Toric intersection numbers: D_i.D_{i+1} = 1/|det(l_i, l_{i+1})| and
/// D_i^2 = -det(l_{i-1}, l_{i+1}) / (det(l_{i-1}, l_i) det(l_i, l_{i+1})).
RatMatrix intersection_numbers(const RationalPolygon& p);

struct Instance {
  std::string name;
  RationalPolygon polygon;
  std::string group;  // group spec as accepted by group_from_spec
};
/// Every single reflection and every chamber-bounding dihedral pair of the
/// built-in polygons and of seeded random mirror-symmetric polygons.
std::vector<Instance> symmetric_instances();

/// One line of the G2 computation lambda(u(E_j)) - lambda(E_j): the word u
/// (generator indices, leftmost acts last), j, the difference in
/// omega-coordinates and its coefficients on -alpha_1^vee, -alpha_2^vee.
struct G2DifferenceLine {
  std::string word;
  std::vector<int> letters;
  std::size_t edge;  // 1 or 2
  LatticeVec omega;
  int c;
  int d;
};
/// The ten reference lines, with the last one read as -2 omega_1.
std::vector<G2DifferenceLine> g2_difference_lines();

/// Every dihedral pair (i, j) of detected reflections whose mirrors bound a
/// chamber, as group specs "dihedral:i,j".
std::vector<std::string> dihedral_specs(const RationalPolygon& p);

}  // namespace toricmirror::testing
