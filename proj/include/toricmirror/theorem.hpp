// The maps phi (one reflection) and psi (dihedral group) from the cohomology of
// the fundamental region to the cohomology of the polygon, and the checks that
// certify H*(X_{P/W}) = H*(X_P)^W.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricmirror/cohomology.hpp"
#include "toricmirror/symmetry.hpp"

namespace toricmirror {

/// Ring map given on generators. images[i] is a polynomial in the target
/// variables (edges of P) for source variable i (edges of P/W).
struct RingMap {
  CohomologyRing source;
  CohomologyRing target;
  std::vector<Polynomial> images;

  Polynomial apply(const Polynomial& q) const { return q.substitute(images); }
  /// Target H^2 coordinates of the images of the source H^2 basis, as columns.
  RatMatrix degree2_matrix() const;
  /// Image of the source point class as a multiple of the target point class.
  Rat top_scalar() const;
};

/// Everything the map constructors need, computed once.
struct SymmetryData {
  ReflectionGroup group;
  SymmetryCase symmetry_case;
  FundamentalRegion region;
  OrbitDecomposition orbits;
  CoeffTable coeffs;
};

SymmetryData analyze_symmetry(const RationalPolygon& p, const ReflectionGroup& group);

/// Name of edge i of P in the target ring, e.g. "x[s1s2(E1)]".
std::vector<std::string> target_variable_names(const RationalPolygon& p, const SymmetryData& data);

/// Throws CaseMismatch when the labelled region disagrees with the case.
RingMap build_phi(const RationalPolygon& p, const SymmetryData& data);
RingMap build_psi(const RationalPolygon& p, const SymmetryData& data);

struct Witness {
  std::string relation;
  std::string image;
  std::string normal_form;
  bool ok = true;
};

struct CheckResult {
  bool ok = true;
  std::vector<Witness> witnesses;
};

CheckResult check_well_defined(const RingMap& map);
CheckResult check_image_invariant(const RingMap& map, const GroupRepresentation& rep);

struct GradedDims {
  std::size_t source2 = 0;
  std::size_t invariant2 = 0;
  std::size_t source4 = 0;
  std::size_t invariant4 = 0;
  std::size_t target2 = 0;
};

struct Replay {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  SymmetryCase symmetry_case;
  std::size_t n = 0;
  std::size_t group_order = 0;
  std::size_t ell = 0;
  std::vector<std::string> element_names;
  std::vector<std::string> source_names;
  std::vector<std::string> target_names;
  std::vector<std::string> images;  // per source variable

  CheckResult well_defined;
  CheckResult image_invariant;
  GradedDims graded_dims;
  bool injective = false;
  bool surjective = false;
  bool multiplicative = false;
  bool isomorphism = false;
  bool pd_shortcut_used = true;
  bool pd_shortcut_verdict = false;
  bool pd_shortcut_agrees = false;
  Rat top_scalar = 0;

  CoeffTable coefficients;
  std::vector<std::string> inherited_labels;  // "E1", "E2", ...
  /// Dihedral: c_{id,j} = c_{s2,j} = d_{id,j} = d_{s1,j} = 0.
  std::optional<bool> coefficient_vanishing;
  bool coefficients_integral = true;
  /// Single reflection: conditions (i)-(iii) where the case demands them.
  std::optional<bool> condition_i;
  std::optional<bool> condition_ii;
  std::optional<bool> condition_iii;

  std::vector<Replay> replays;
  std::vector<std::string> warnings;
};

/// Fills dimensions, injectivity, surjectivity, multiplicativity and both
/// verdicts, given the results of the two earlier checks.
void check_isomorphism(const RingMap& map, const GroupRepresentation& rep, const std::vector<Polynomial>& orbit_sums,
                       VerificationReport& report);

VerificationReport verify_theorem(const RationalPolygon& p, const ReflectionGroup& group);

/// Same, with a caller-supplied coefficient table (used for negative controls).
VerificationReport verify_with_coefficients(const RationalPolygon& p, const ReflectionGroup& group,
                                            const CoeffTable& coeffs);

}  // namespace toricmirror
