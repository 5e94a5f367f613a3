#pragma once

#include <optional>

#include "transversal/family.hpp"

namespace transversal {

enum class PathCase { Constant, TwoBody, ThreeBody, GeodesicMarch };

// Polyline on the unit sphere from a non-transversal (or boundary) direction
// into the union of separating great circles. Consecutive samples subtend
// less than 0.02 rad; every sample has depth <= tau; the last sample lies on
// a circle of the set within 1e-6.
struct SpherePath {
  std::vector<Vec3> samples;
  double stop_angle = 0.0;
  PathCase case_tag = PathCase::Constant;
  std::optional<HellyWitness> witness;
  int end_circle = -1;  // index into the GreatCircleSet used
};

// Boundary locator: bisects the geodesic arc from non-transversal v to
// transversal w until |depth| <= tau. At most 60 bisection steps.
UnitVec3 refine_to_boundary(const Family& f, const UnitVec3& v, const UnitVec3& w);

// From a boundary direction (|depth(v)| <= tau), constructs a validated path
// staying non-transversal until it reaches a separating circle. The route is
// chosen from a two- or three-body witness subfamily.
SpherePath build_boundary_path(const Family& f, const UnitVec3& v, const GreatCircleSet& y);

// From any non-transversal direction, marches along the geodesic toward the
// nearest separating circle; if the boundary of the non-transversal region is
// hit first, finishes with build_boundary_path. Boundary starts delegate
// directly.
SpherePath connect_to_separators(const Family& f, const UnitVec3& x, const GreatCircleSet& y);

// Step between consecutive path samples, radians.
inline constexpr double kPathStep = 0.005;

}  // namespace transversal
