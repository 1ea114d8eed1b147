// Reflections and dihedral groups acting on a polygon, their fundamental
// regions, the orbit labelling of edges, and the coefficient tables relating
// the normal of u(E_j) to the mirror normals.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricmirror/geometry.hpp"

namespace toricmirror {

/// Linear involution of M⊗R with determinant -1. The fixed line is
/// {<x, mirror_normal> = 0}; mirror_normal is primitive with its first nonzero
/// coordinate positive.
struct Reflection {
  Mat2 matrix;
  LatticeVec mirror_normal;
};

/// Image of a normal under the contragredient action g^{-T}. Throws
/// NotASymmetry when the result is not integral.
LatticeVec act_on_normal(const Mat2& g, const LatticeVec& normal);

/// Primitive normal of the fixed line of a reflection matrix.
LatticeVec mirror_normal_of(const Mat2& reflection);

/// perm[i] = index of the edge g(E_i).
using EdgePermutation = std::vector<std::size_t>;

EdgePermutation induced_edge_permutation(const RationalPolygon& p, const Mat2& g);
EdgePermutation induced_edge_permutation(const RationalPolygon& p, const Reflection& sigma);

/// All reflections preserving p, in a deterministic order (by the vertex that
/// vertex 0 is sent to).
std::vector<Reflection> detect_reflections(const RationalPolygon& p);

struct GroupElement {
  std::vector<int> word;  // generator indices, leftmost letter acts last
  Mat2 matrix;

  std::size_t length() const noexcept { return word.size(); }
};

/// Group generated by one reflection ({id, sigma}) or by two (dihedral of
/// order 2*ell).
class ReflectionGroup {
 public:
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<Reflection>& generators() const noexcept { return generators_; }
  std::size_t ell() const noexcept { return ell_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }

  /// Minimal length representatives u with l(u s_g) >= l(u), increasing length.
  const std::vector<std::size_t>& coset_reps(std::size_t generator) const { return coset_reps_.at(generator); }

  std::size_t identity_index() const noexcept { return 0; }
  std::size_t generator_index(std::size_t generator) const { return generator_elements_.at(generator); }
  std::size_t index_of(const Mat2& m) const;

  /// "id", "sigma", "s1s2s1", ...
  std::string element_name(std::size_t i) const;
  std::string generator_name(std::size_t generator) const;

 private:
  friend ReflectionGroup single_reflection_group(const Reflection&);
  friend ReflectionGroup dihedral_group(const Reflection&, const Reflection&);
  void finish();

  std::vector<Reflection> generators_;
  std::size_t ell_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<std::size_t>> coset_reps_;
  std::vector<std::size_t> generator_elements_;
};

ReflectionGroup single_reflection_group(const Reflection& sigma);

/// Throws EllTooSmall if s1 == s2 and NotFiniteOrder if s1*s2 has no small order.
ReflectionGroup dihedral_group(const Reflection& s1, const Reflection& s2);

/// Edge permutation of every group element, indexed like group.elements().
/// Largest reflection group of p: a dihedral group on two mirrors bounding a
/// chamber when at least two reflections exist, else the single reflection.
/// Throws NotASymmetry if p has no reflection symmetry.
ReflectionGroup auto_group(const RationalPolygon& p);

/// "auto", "reflection:<k>" or "dihedral:<i>,<j>", indices into
/// detect_reflections(p).
ReflectionGroup group_from_spec(const RationalPolygon& p, std::string_view spec);

std::vector<EdgePermutation> element_permutations(const RationalPolygon& p, const ReflectionGroup& group);

/// Sector of the plane cut out by the mirrors that serves as the identity
/// chamber: <x, eta[g]> <= 0 for every generator g.
struct Chamber {
  std::vector<LatticeVec> eta;
  /// Rank 2: ray along the mirror of generator g. Rank 1: both rays of the mirror.
  std::vector<RatPoint> wall_rays;
};

Chamber identity_chamber(const ReflectionGroup& group);

enum class CaseKind { kSingle11, kSingle12, kSingle13, kDihedral21, kDihedral22, kDihedral23 };

std::string case_name(CaseKind kind);

/// Where a mirror ray leaves the polygon.
struct WallIncidence {
  std::size_t generator = 0;
  RatPoint ray;
  bool through_vertex = false;
  std::size_t index = 0;  // vertex index if through_vertex, else edge index
};

struct SymmetryCase {
  CaseKind kind = CaseKind::kSingle11;
  std::vector<WallIncidence> walls;
};

SymmetryCase classify_single(const RationalPolygon& p, const Reflection& sigma);
SymmetryCase classify_dihedral(const RationalPolygon& p, const ReflectionGroup& group);
SymmetryCase classify(const RationalPolygon& p, const ReflectionGroup& group);

struct InheritedEdge {
  std::size_t region_edge = 0;
  std::size_t parent_edge = 0;
  bool truncated = false;
  /// Index 1..n, plus 2n+1 / 2n+2 for the sigma-fixed edges of a
  /// single reflection.
  std::size_t label = 0;
  /// Generator fixing the parent edge, if any.
  std::optional<std::size_t> stabilizer;
};

struct MirrorEdge {
  std::size_t region_edge = 0;
  std::size_t generator = 0;
  LatticeVec eta;
};

struct FundamentalRegion {
  RationalPolygon polygon;
  /// Rank 2: from the s1 wall to the s2 wall, labelled E_1..E_n, where E_1
  /// (E_n) is omitted when the s1 (s2) mirror leaves through a vertex. Rank 1:
  /// E_1..E_n, then E_{2n+1}, E_{2n+2} when present.
  std::vector<InheritedEdge> inherited;
  std::size_t n = 0;
  std::vector<MirrorEdge> mirrors;  // indexed by generator
  Chamber chamber;

  /// Variable name of region edge e, e.g. "x_1", "x_s2", "x_sigma".
  std::string variable_name(std::size_t region_edge, const ReflectionGroup& group) const;
};

FundamentalRegion fundamental_region(const RationalPolygon& p, const ReflectionGroup& group);

/// F(P) as a disjoint union of orbits u(E_j).
struct OrbitDecomposition {
  struct Label {
    std::size_t element = 0;
    std::size_t inherited = 0;  // position in FundamentalRegion::inherited
  };
  std::vector<Label> label_of_edge;  // per edge of P
  /// Per inherited edge: the indexing elements (coset reps or all of W) and the
  /// corresponding edges of P, in the same order.
  std::vector<std::vector<std::size_t>> orbit_elements;
  std::vector<std::vector<std::size_t>> orbit_edges;

  /// "s1s2(E1)" style name of edge i of P.
  std::string edge_name(std::size_t edge, const ReflectionGroup& group, const FundamentalRegion& region) const;
};

OrbitDecomposition orbit_decomposition(const RationalPolygon& p, const ReflectionGroup& group,
                                       const FundamentalRegion& region);

/// lambda(u(E_j)) - lambda(E_j) = c[u][j] * eta_1 + d[u][j] * eta_2, for every
/// element u of W (d is empty for a single reflection).
struct CoeffTable {
  std::size_t rank = 1;
  std::vector<std::vector<Rat>> c;
  std::vector<std::vector<Rat>> d;

  bool all_integral() const;
};

CoeffTable coefficients(const RationalPolygon& p, const ReflectionGroup& group, const FundamentalRegion& region);

}  // namespace toricmirror
