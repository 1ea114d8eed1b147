// Rational cohomology of the toric surface of a polygon, presented as
//   Q[x_1, ..., x_m] / (I + J)
// with I the Stanley-Reisner ideal and J the linear ideal, and realized as a
// graded algebra in degrees 0, 2, 4.
#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "toricmirror/geometry.hpp"
#include "toricmirror/matrix.hpp"
#include "toricmirror/symmetry.hpp"

namespace toricmirror {

/// Sorted multiset of variable indices; x_0^2 x_3 is {0, 0, 3}.
using Monomial = std::vector<std::size_t>;

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rat& c);
  static Polynomial variable(std::size_t index, const Rat& coeff = 1);

  const std::map<Monomial, Rat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(Monomial m, const Rat& coeff);

  /// Cohomological degree (twice the polynomial degree); 0 for the zero
  /// polynomial. Throws InvalidInput when the polynomial is not homogeneous.
  int degree() const;

  /// Substitutes images[i] for x_i.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Drops every monomial divisible by one of the given monomials.
  Polynomial reduce_monomials(const std::vector<Monomial>& ideal) const;

  std::string to_string(const std::vector<std::string>& names) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  bool operator==(const Polynomial& other) const = default;

 private:
  std::map<Monomial, Rat> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rat& s, const Polynomial& p);

/// Generators of I and J for one polygon. Variable i belongs to edge i.
struct Presentation {
  std::vector<std::string> names;
  std::vector<LatticeVec> normals;
  /// x_i x_j for non-adjacent edges, or x_0 x_1 x_2 for a triangle.
  std::vector<Monomial> sr_generators;
  /// One row per basis vector of M: (<m, lambda_1>, ..., <m, lambda_m>).
  RatMatrix linear_relations;

  std::size_t size() const noexcept { return names.size(); }
  Polynomial linear_form(std::size_t row) const;
};

/// Default names are x_1, ..., x_m.
Presentation presentation(const RationalPolygon& p);
Presentation presentation(const RationalPolygon& p, std::vector<std::string> names);

/// Homogeneous class. Degree 2 coordinates refer to deg2_basis(); degree 4
/// has one coordinate, the multiple of the point class. Degrees above 4 carry
/// no coordinates and are always zero.
struct RingElement {
  int degree = 0;
  RatVector coords;

  bool is_zero() const;
  bool operator==(const RingElement&) const = default;
};

class CohomologyRing {
 public:
  const Presentation& presentation() const noexcept { return pres_; }
  std::size_t num_variables() const noexcept { return pres_.size(); }

  /// Variables whose classes form the basis of H^2.
  const std::vector<std::size_t>& deg2_basis() const noexcept { return deg2_basis_; }
  std::size_t deg2_dim() const noexcept { return deg2_basis_.size(); }

  /// Row i holds the H^2 coordinates of x_i.
  const RatMatrix& deg2_nf() const noexcept { return deg2_nf_; }

  /// Entry (i, j) is x_i x_j as a multiple of the point class.
  const RatMatrix& product_table() const noexcept { return product_table_; }

  std::array<std::size_t, 3> betti() const noexcept { return {1, deg2_dim(), 1}; }

  RingElement unit() const;
  RingElement point_class() const;
  RingElement variable(std::size_t i) const;
  RingElement zero(int degree) const;

  RingElement normal_form(const Polynomial& q) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;
  RingElement add(const RingElement& a, const RingElement& b) const;

  /// Pairing matrix on the H^2 basis.
  RatMatrix poincare_pairing() const;

 private:
  friend CohomologyRing build_ring(const Presentation& pres);

  Presentation pres_;
  std::vector<std::size_t> deg2_basis_;
  RatMatrix deg2_nf_;
  RatMatrix product_table_;
};

/// Throws UnexpectedBettiNumber if dim H^2 != m - 2 or dim H^4 != 1, and
/// DegeneratePairing if the Poincare pairing is singular.
CohomologyRing build_ring(const Presentation& pres);

/// Action u(x_E) = x_{u(E)} on H^2 (matrices in the deg2 basis, columns are
/// images of basis vectors) and on H^4 (scalars), per element of the group.
struct GroupRepresentation {
  std::vector<RatMatrix> deg2;
  std::vector<Rat> deg4;
  /// Element indices of the generators.
  std::vector<std::size_t> generators;
};

GroupRepresentation group_action(const CohomologyRing& ring, const RationalPolygon& p,
                                 const ReflectionGroup& group);

/// Basis of the vectors fixed by every generator, in degree 2 or 4.
std::vector<RatVector> invariant_subspace(const GroupRepresentation& rep, int degree);

/// Averaging operator (1/|W|) sum_u rho(u) on H^2.
RatMatrix reynolds_operator(const GroupRepresentation& rep);

/// Orbit sums sum_{E in orbit} x_E over the edges of p, one per inherited edge
/// of the fundamental region, in label order.
std::vector<Polynomial> equivariant_invariant_generators(const RationalPolygon& p, const ReflectionGroup& group);

}  // namespace toricmirror
