#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "transversal/lp.hpp"
#include "transversal/poly2.hpp"
#include "transversal/vec.hpp"

namespace transversal {

// Convex set given as the hull of its vertices. Degenerate sets (segments,
// planar polygons, single points) are first-class citizens.
struct ConvexBody {
  std::vector<Vec3> vertices;
  std::string label;

  Vec3 centroid() const;
};

// Oriented plane {p : normal·p = offset}. When produced as a separator the
// margin equals the smaller clearance of the two bodies to the plane.
struct Plane3 {
  UnitVec3 normal;
  double offset = 0.0;
  double margin = 0.0;
};

struct DepthResult {
  double depth = 0.0;  // signed max-min clearance, length units
  Vec2 witness;        // optimizer, in the projection frame
};

ConvexBody make_box(const Vec3& center, const Vec3& half_extents, std::string label = {});

// Deterministic quasi-uniform unit directions (golden-angle spiral).
std::vector<Vec3> fibonacci_directions(int n);

// Polytope circumscribed about the ball: a Fibonacci direction set scaled by
// the reciprocal of the cosine of its measured covering radius, so the hull's
// support exceeds the radius in every direction.
ConvexBody make_ball(const Vec3& center, double radius, int facets, std::string label = {});

// Orthogonal projection of the body onto the plane of orthonormal_basis(v),
// reduced to its planar convex hull.
Poly2 project(const ConvexBody& body, const UnitVec3& v);

// Signed common depth of a set of convex polygons: the largest t such that
// some point has clearance >= t inside every halfplane of every polygon.
// Positive iff a common interior point exists; negative measures infeasibility.
// Bounded through an implicit box around the inputs (or `bound` if positive).
DepthResult common_depth(std::span<const Poly2> polys, std::uint64_t seed = kDefaultLpSeed,
                         double bound = 0.0);

// Shortest vector between two vertex hulls (GJK on the Minkowski difference).
struct HullDistance {
  double distance = 0.0;
  Vec3 direction;  // unit, from a toward b; zero when hulls intersect
};
HullDistance hull_distance(std::span<const Vec3> a, std::span<const Vec3> b);

double point_hull_distance(const Vec3& q, std::span<const Vec3> hull);

// Maximum-margin separating plane with `a` on the negative side.
// Throws Error(NotDisjoint) when the achievable margin is <= tau_sep.
Plane3 strict_separator(const ConvexBody& a, const ConvexBody& b, double tau_sep);

}  // namespace transversal
