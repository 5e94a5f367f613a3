#pragma once

#include <vector>

#include "transversal/vec.hpp"

namespace transversal {

// Convex polygon, vertices in counterclockwise order with no three collinear
// retained vertices. May degenerate to a segment (2 vertices) or a point (1).
struct Poly2 {
  std::vector<Vec2> v;

  bool empty() const { return v.empty(); }
  std::size_t size() const { return v.size(); }
};

// Halfplane n·q >= b with unit normal n pointing inside.
struct Halfplane {
  Vec2 n;
  double b = 0.0;

  double clearance(const Vec2& q) const { return n.dot(q) - b; }
};

// Andrew monotone chain; duplicate points are merged, collinear interior
// points dropped. Degenerate inputs yield a point or a segment.
Poly2 convex_hull(std::vector<Vec2> pts);

// Halfplane description of the polygon. Segments become a zero-width slab
// plus two end caps; points become four axis-aligned halfplanes.
void append_halfplanes(const Poly2& p, std::vector<Halfplane>& out);

bool contains(const Poly2& p, const Vec2& q, double tol);

// Euclidean distance from q to the polygon (0 when inside).
double distance(const Poly2& p, const Vec2& q);

// Sutherland-Hodgman clip of a convex polygon against one halfplane.
Poly2 clip(const Poly2& subject, const Halfplane& h);

bool is_convex_ccw(const Poly2& p, double eps);

// Direction w on the unit circle maximizing
//   min_{p in high} w·p - max_{p in low} w·p
// together with that maximal value (the signed gap; negative on overlap).
// Quasi-concave angular objective: dense scan plus local ternary refinement.
struct MarginDir {
  Vec2 dir;
  double gap = 0.0;
};
MarginDir max_margin_direction(const Poly2& low, const Poly2& high);

}  // namespace transversal
