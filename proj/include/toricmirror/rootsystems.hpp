// Rank-2 root systems in the coordinates M = root lattice (basis alpha_1,
// alpha_2) and N = coweight lattice (basis omega_1, omega_2).
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "toricmirror/geometry.hpp"
#include "toricmirror/symmetry.hpp"

namespace toricmirror {

enum class RootType { kA2, kB2, kC2, kG2 };

std::string root_type_name(RootType type);
/// Accepts "A2", "B2", "C2", "G2" (case-insensitive). Throws InvalidInput.
RootType parse_root_type(std::string_view text);

struct RootSystemRank2 {
  RootType type = RootType::kG2;
  /// cartan[i][j] = <alpha_i^vee, alpha_j>.
  std::array<std::array<int, 2>, 2> cartan{};
  /// alpha_i^vee in omega-coordinates (row i of the Cartan matrix).
  std::array<LatticeVec, 2> simple_coroots;
  /// s_i acting on N in omega-coordinates.
  std::array<Mat2, 2> weyl_on_coweights;
  /// s_i acting on M in alpha-coordinates; the transpose of the above.
  std::array<Mat2, 2> weyl_on_roots;
};

RootSystemRank2 root_system(RootType type);

/// The Weyl group with generators s_1, s_2 acting on M.
ReflectionGroup weyl_group(const RootSystemRank2& rs);

/// Offsets (a, b) for the omega_2 family and the omega_1 family.
struct WeightOffsets {
  Rat a;
  Rat b;
};

/// Offsets of the weight polytope of rho: a = -<rho, omega_2>,
/// b = -<rho, omega_1>. For G2 these are (-3, -5).
WeightOffsets default_offsets(const RootSystemRank2& rs);

/// Intersection of <x, u omega_2> + a <= 0 and <x, v omega_1> + b <= 0 over the
/// Weyl group. Throws DegenerateOffsets if some half-plane is redundant or an
/// offset is not negative.
RationalPolygon weight_polytope(const RootSystemRank2& rs, const WeightOffsets& offsets);

/// The coefficient rows of the G2 example: E_1 (the omega_2 edge) over the
/// representatives of ^{s1}W, E_2 (the omega_1 edge) over ^{s2}W.
struct GoldenTable {
  CoeffTable table;
  std::vector<std::string> s1_reps;
  std::vector<std::string> s2_reps;
  std::vector<Rat> c1, d1, c2, d2;
};

/// Runs the symmetry pipeline on the default G2 weight polytope.
GoldenTable g2_golden_table(const RootSystemRank2& rs);

/// Reference G2 values, used by rootdemo to print a diff.
GoldenTable g2_reference_table();

}  // namespace toricmirror
