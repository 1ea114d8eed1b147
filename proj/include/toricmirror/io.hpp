// JSON input and output: polygons, rings and verification reports. Rationals
// are always strings ("p/q" or "p"); floating-point numbers are rejected.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toricmirror/cohomology.hpp"
#include "toricmirror/geometry.hpp"
#include "toricmirror/theorem.hpp"

namespace toricmirror {

using Json = nlohmann::json;

struct NamedPolygon {
  std::string name;
  RationalPolygon polygon;
};

/// {"name": ..., "vertices": [["p/q", "r/s"], ...]} or
/// {"name": ..., "halfspaces": [{"normal": [a, b], "offset": "p/q"}, ...]}, or both
/// keys when they describe the same polygon.
/// Throws Parse for malformed JSON, floats or schema violations, and the
/// geometry errors for invalid polygons.
NamedPolygon parse_polygon_json(std::string_view text);
NamedPolygon load_polygon_file(const std::string& path);

Json rat_json(const Rat& x);
Json polygon_to_json(const std::string& name, const RationalPolygon& p);
Json matrix_to_json(const RatMatrix& m);

/// Betti numbers, H^2 basis, pairing matrix, SR generator count, and the
/// group action keyed by element name when a group is given.
Json ring_to_json(const CohomologyRing& ring, const ReflectionGroup* group = nullptr,
                  const GroupRepresentation* rep = nullptr);

Json report_to_json(const VerificationReport& report);

/// Polygons of the built-in library: square, hexagon, house, g2, d12, d8.
std::vector<std::string> builtin_names();
NamedPolygon builtin_polygon(std::string_view name);

}  // namespace toricmirror
