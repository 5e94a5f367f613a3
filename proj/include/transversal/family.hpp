#pragma once

#include <optional>
#include <span>
#include <vector>

#include "transversal/convex.hpp"

namespace transversal {

// Tolerance knobs, all in scene length units. `tau` models openness of the
// bodies: depth > tau is transversal, depth < -tau non-transversal, the rest
// boundary-ambiguous.
struct Tolerances {
  double tau = 0.0;
  double tau_sep = 0.0;
  double tau_line = 0.0;
  double tau_curve = 0.0;
};

// Optional absolute overrides; unset fields derive from the scene diameter
// (tau = 1e-7 d, tau_sep = tau, tau_line = tau, tau_curve = 1e-4 d).
struct ToleranceOverrides {
  std::optional<double> tau, tau_sep, tau_line, tau_curve;
};

enum class Label { Transversal, NonTransversal, Ambiguous };

struct GreatCircle {
  UnitVec3 normal;
  std::pair<int, int> pair;
};

struct GreatCircleSet {
  std::vector<GreatCircle> circles;
};

struct DirectedLine {
  Vec3 origin;
  UnitVec3 direction;
};

// Subfamily of two or three bodies whose projections at the queried direction
// already have no common interior point.
struct HellyWitness {
  std::vector<int> indices;
  double depth_at_v = 0.0;
};

// Ordered list of pairwise disjoint convex bodies with cached pairwise
// max-margin separators. Immutable after construction; all queries are
// read-only and safe to issue concurrently.
class Family {
 public:
  explicit Family(std::vector<ConvexBody> bodies, ToleranceOverrides overrides = {});

  int size() const { return static_cast<int>(bodies_.size()); }
  const ConvexBody& body(int i) const { return bodies_[i]; }
  const std::vector<ConvexBody>& bodies() const { return bodies_; }
  double diameter() const { return diameter_; }
  const Tolerances& tol() const { return tol_; }

  // Separator plane with body i on the negative side; requires i < j as stored.
  const Plane3& separator(int i, int j) const;
  double min_separator_margin() const;

  // Signed depth of the common intersection of all projections at v.
  DepthResult direction_depth(const UnitVec3& v, std::uint64_t seed = kDefaultLpSeed) const;
  Label classify_depth(double depth) const;

  // Common intersection polygon of the projections, or nullopt when the
  // depth at v is <= tau.
  std::optional<Poly2> fiber_polygon(const UnitVec3& v) const;

  GreatCircleSet separating_circles() const;

  // Minimum-size subfamily (pairs before triples, lexicographic) whose
  // projections at v have depth <= tau. Requires depth(v) <= tau.
  HellyWitness helly_witness(const UnitVec3& v) const;

  bool is_line_transversal(const DirectedLine& l) const;

  // Body indices ordered by entry point along the directed line; intervals
  // shorter than tau use their midpoint. Requires is_line_transversal.
  std::vector<int> geometric_permutation(const DirectedLine& l) const;

  // A concrete transversal line in direction v (through the depth witness).
  // Requires depth(v) > tau.
  DirectedLine transversal_line(const UnitVec3& v) const;

 private:
  std::vector<ConvexBody> bodies_;
  std::vector<Plane3> separators_;  // upper-triangle, (i,j) with i < j
  double diameter_ = 0.0;
  Tolerances tol_;

  int pair_index(int i, int j) const;
};

// Line transversal test for a raw body list (no disjointness requirement).
bool is_line_transversal(std::span<const ConvexBody> bodies, const DirectedLine& l,
                         double tau_line);

// Entry/exit parameters of the line through a single convex body; nullopt
// when the line misses it by more than tau_line.
std::optional<std::pair<double, double>> line_body_interval(const ConvexBody& body,
                                                            const DirectedLine& l,
                                                            double tau_line);

}  // namespace transversal
