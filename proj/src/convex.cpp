#include "transversal/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "transversal/error.hpp"

namespace transversal {

namespace {

// ---- GJK: closest point to the origin on a simplex of <= 4 points ----------

struct Simplex {
  Vec3 p[4];
  int n = 0;
};

Vec3 closest_on_segment(const Vec3& a, const Vec3& b, Simplex& keep) {
  Vec3 ab = b - a;
  double denom = ab.dot(ab);
  double t = denom > 0 ? std::clamp(-a.dot(ab) / denom, 0.0, 1.0) : 0.0;
  if (t <= 0) {
    keep.p[0] = a;
    keep.n = 1;
    return a;
  }
  if (t >= 1) {
    keep.p[0] = b;
    keep.n = 1;
    return b;
  }
  keep.p[0] = a;
  keep.p[1] = b;
  keep.n = 2;
  return a + t * ab;
}

Vec3 closest_on_triangle(const Vec3& a, const Vec3& b, const Vec3& c, Simplex& keep) {
  // Ericson-style Voronoi region tests against the origin.
  Vec3 ab = b - a, ac = c - a, ap = -a;
  double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) {
    keep.p[0] = a;
    keep.n = 1;
    return a;
  }
  Vec3 bp = -b;
  double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) {
    keep.p[0] = b;
    keep.n = 1;
    return b;
  }
  double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) {
    double t = d1 / (d1 - d3);
    keep.p[0] = a;
    keep.p[1] = b;
    keep.n = 2;
    return a + t * ab;
  }
  Vec3 cp = -c;
  double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) {
    keep.p[0] = c;
    keep.n = 1;
    return c;
  }
  double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) {
    double t = d2 / (d2 - d6);
    keep.p[0] = a;
    keep.p[1] = c;
    keep.n = 2;
    return a + t * ac;
  }
  double va = d3 * d6 - d5 * d4;
  if (va <= 0 && d4 - d3 >= 0 && d5 - d6 >= 0) {
    double t = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    keep.p[0] = b;
    keep.p[1] = c;
    keep.n = 2;
    return b + t * (c - b);
  }
  if (!(va + vb + vc > 0)) {  // degenerate (collinear) triangle
    double best = std::numeric_limits<double>::infinity();
    Vec3 best_pt;
    Simplex best_keep;
    const Vec3* e[3][2] = {{&a, &b}, {&a, &c}, {&b, &c}};
    for (auto& seg : e) {
      Simplex k2;
      Vec3 p = closest_on_segment(*seg[0], *seg[1], k2);
      if (p.norm2() < best) {
        best = p.norm2();
        best_pt = p;
        best_keep = k2;
      }
    }
    keep = best_keep;
    return best_pt;
  }
  double denom = 1.0 / (va + vb + vc);
  double v = vb * denom, w = vc * denom;
  keep.p[0] = a;
  keep.p[1] = b;
  keep.p[2] = c;
  keep.n = 3;
  return a + v * ab + w * ac;
}

Vec3 closest_on_simplex(Simplex& s) {
  if (s.n == 1) return s.p[0];
  if (s.n == 2) {
    Simplex keep;
    Vec3 r = closest_on_segment(s.p[0], s.p[1], keep);
    s = keep;
    return r;
  }
  if (s.n == 3) {
    Simplex keep;
    Vec3 r = closest_on_triangle(s.p[0], s.p[1], s.p[2], keep);
    s = keep;
    return r;
  }
  // Tetrahedron: if the origin is inside, distance is zero; otherwise take
  // the nearest of the four faces. Near-flat tetrahedra skip the containment
  // test (segment and planar bodies produce them) and use the faces directly.
  const Vec3 &a = s.p[0], &b = s.p[1], &c = s.p[2], &d = s.p[3];
  double scale3 = 0.0;
  for (int i = 0; i < 4; ++i) scale3 = std::max(scale3, s.p[i].norm());
  scale3 = scale3 * scale3 * scale3;
  double vol = std::fabs((b - a).dot((c - a).cross(d - a)));
  auto same_side = [](const Vec3& p0, const Vec3& p1, const Vec3& p2, const Vec3& opp) {
    Vec3 n = (p1 - p0).cross(p2 - p0);
    double s_opp = n.dot(opp - p0);
    double s_orig = n.dot(-p0);
    return s_opp * s_orig > 0;
  };
  if (vol > 1e-14 * std::max(scale3, 1e-300) && same_side(a, b, c, d) && same_side(a, b, d, c) &&
      same_side(a, c, d, b) && same_side(b, c, d, a)) {
    s.n = 4;
    return {0, 0, 0};
  }
  double best = std::numeric_limits<double>::infinity();
  Vec3 best_pt;
  Simplex best_keep;
  const Vec3* f[4][3] = {{&a, &b, &c}, {&a, &b, &d}, {&a, &c, &d}, {&b, &c, &d}};
  for (auto& tri : f) {
    Simplex keep;
    Vec3 p = closest_on_triangle(*tri[0], *tri[1], *tri[2], keep);
    double d2 = p.norm2();
    if (d2 < best) {
      best = d2;
      best_pt = p;
      best_keep = keep;
    }
  }
  s = best_keep;
  return best_pt;
}

Vec3 support(std::span<const Vec3> pts, const Vec3& dir) {
  const Vec3* best = &pts[0];
  double bd = pts[0].dot(dir);
  for (const Vec3& p : pts) {
    double d = p.dot(dir);
    if (d > bd) {
      bd = d;
      best = &p;
    }
  }
  return *best;
}

// Closest point to the origin on the hull of the given point cloud, where a
// point is produced lazily through `sup(dir)` = argmax of dir·x.
template <typename Support>
Vec3 gjk_closest(Support sup, const Vec3& initial_dir, double scale) {
  Simplex s;
  Vec3 d0 = initial_dir.norm2() > 0 ? initial_dir : Vec3{1, 0, 0};
  s.p[0] = sup(d0);
  s.n = 1;
  Vec3 v = s.p[0];
  const double eps = 1e-13 * std::max(1.0, scale * scale);

  for (int it = 0; it < 200; ++it) {
    double vn2 = v.norm2();
    if (vn2 <= eps) return {0, 0, 0};
    Vec3 w = sup(-v);
    if (vn2 - v.dot(w) <= 1e-12 * std::max(vn2, 1e-300)) return v;  // support gap closed
    bool dup = false;
    for (int i = 0; i < s.n; ++i)
      if ((s.p[i] - w).norm2() <= 0.0) dup = true;
    if (dup) return v;
    if (s.n < 4) s.p[s.n++] = w;
    v = closest_on_simplex(s);
    if (s.n == 4) return {0, 0, 0};  // origin enclosed
  }
  return v;
}

}  // namespace

Vec3 ConvexBody::centroid() const {
  Vec3 c;
  for (const Vec3& p : vertices) c += p;
  return vertices.empty() ? c : c * (1.0 / static_cast<double>(vertices.size()));
}

ConvexBody make_box(const Vec3& center, const Vec3& half, std::string label) {
  ConvexBody b;
  b.label = std::move(label);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1})
        b.vertices.push_back(center + Vec3{sx * half.x, sy * half.y, sz * half.z});
  return b;
}

std::vector<Vec3> fibonacci_directions(int n) {
  std::vector<Vec3> dirs;
  dirs.reserve(n);
  const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double th = golden_angle * i;
    dirs.push_back({r * std::cos(th), r * std::sin(th), z});
  }
  return dirs;
}

ConvexBody make_ball(const Vec3& center, double radius, int facets, std::string label) {
  if (facets < 4) throw Error(Errc::BadArgument, "ball needs at least 4 facets");
  if (!(radius > 0)) throw Error(Errc::BadArgument, "ball radius must be positive");
  std::vector<Vec3> dirs = fibonacci_directions(facets);

  // Covering radius of the direction set, measured against a finer probe set.
  std::vector<Vec3> probes = fibonacci_directions(20 * facets + 1);
  double worst = -1.0;
  for (const Vec3& q : probes) {
    double best = -1.0;
    for (const Vec3& u : dirs) best = std::max(best, q.dot(u));
    worst = std::max(worst, std::acos(std::clamp(best, -1.0, 1.0)));
  }
  double scale = 1.0 / std::cos(std::min(worst, 1.0));

  ConvexBody b;
  b.label = std::move(label);
  b.vertices.reserve(facets);
  for (const Vec3& u : dirs) b.vertices.push_back(center + (radius * scale) * u);
  return b;
}

Poly2 project(const ConvexBody& body, const UnitVec3& v) {
  auto [e1, e2] = orthonormal_basis(v);
  std::vector<Vec2> pts;
  pts.reserve(body.vertices.size());
  for (const Vec3& p : body.vertices) pts.push_back({p.dot(e1), p.dot(e2)});
  return convex_hull(std::move(pts));
}

DepthResult common_depth(std::span<const Poly2> polys, std::uint64_t seed, double bound) {
  if (polys.empty()) throw Error(Errc::EmptyInput, "common_depth of no polygons");
  for (const Poly2& p : polys)
    if (p.empty()) throw Error(Errc::EmptyInput, "common_depth with an empty polygon");

  // Center the variables on the joint bounding box so the box bound stays
  // meaningful for scenes far from the origin.
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi{-lo.x, -lo.y};
  for (const Poly2& p : polys)
    for (const Vec2& q : p.v) {
      lo.x = std::min(lo.x, q.x);
      lo.y = std::min(lo.y, q.y);
      hi.x = std::max(hi.x, q.x);
      hi.y = std::max(hi.y, q.y);
    }
  Vec2 center = 0.5 * (lo + hi);
  double diag = (hi - lo).norm();
  if (bound <= 0) bound = 10.0 * diag + 1.0;

  std::vector<Halfplane> hs;
  for (const Poly2& p : polys) append_halfplanes(p, hs);

  std::vector<LpRow> rows;
  rows.reserve(hs.size());
  for (const Halfplane& h : hs) {
    // clearance n·q - b >= t, with q measured from the box center
    LpRow r;
    r.a = {-h.n.x, -h.n.y, 1.0, 0.0};
    r.b = -(h.b - h.n.dot(center));
    rows.push_back(r);
  }

  const double c[3] = {0.0, 0.0, 1.0};
  LpResult lr = solve_lp_max(3, std::span<const double>(c, 3), rows, bound, seed);
  if (!lr.feasible) throw Error(Errc::EmptyInput, "depth LP infeasible; malformed polygon data");
  return {lr.x[2], Vec2{lr.x[0], lr.x[1]} + center};
}

HullDistance hull_distance(std::span<const Vec3> a, std::span<const Vec3> b) {
  double scale = 0.0;
  for (const Vec3& p : a) scale = std::max(scale, p.norm());
  for (const Vec3& p : b) scale = std::max(scale, p.norm());

  Vec3 ca, cb;
  for (const Vec3& p : a) ca += p;
  for (const Vec3& p : b) cb += p;
  ca = ca * (1.0 / a.size());
  cb = cb * (1.0 / b.size());

  auto sup = [&](const Vec3& d) { return support(b, d) - support(a, -d); };
  Vec3 v = gjk_closest(sup, cb - ca, scale);
  double dist = v.norm();
  HullDistance out;
  out.distance = dist;
  out.direction = dist > 0 ? v * (1.0 / dist) : Vec3{0, 0, 0};
  return out;
}

double point_hull_distance(const Vec3& q, std::span<const Vec3> hull) {
  double scale = q.norm();
  for (const Vec3& p : hull) scale = std::max(scale, p.norm());
  auto sup = [&](const Vec3& d) { return support(hull, d) - q; };
  Vec3 v = gjk_closest(sup, hull[0] - q, scale);
  return v.norm();
}

Plane3 strict_separator(const ConvexBody& a, const ConvexBody& b, double tau_sep) {
  if (a.vertices.empty() || b.vertices.empty())
    throw Error(Errc::EmptyInput, "separator of an empty body");
  HullDistance hd = hull_distance(a.vertices, b.vertices);
  if (hd.distance <= 0)
    throw Error(Errc::NotDisjoint, "bodies '" + a.label + "' and '" + b.label + "' intersect");

  // Recompute supports along the optimal direction; the plane through the
  // midpoint of the supporting slab carries the exact margin.
  const Vec3 n = hd.direction;
  double max_a = -std::numeric_limits<double>::infinity();
  double min_b = std::numeric_limits<double>::infinity();
  for (const Vec3& p : a.vertices) max_a = std::max(max_a, p.dot(n));
  for (const Vec3& p : b.vertices) min_b = std::min(min_b, p.dot(n));
  double margin = 0.5 * (min_b - max_a);
  if (margin <= tau_sep)
    throw Error(Errc::NotDisjoint, "bodies '" + a.label + "' and '" + b.label +
                                       "' are not strictly separated (margin " +
                                       std::to_string(margin) + ")");
  Plane3 plane;
  plane.normal.v = n;
  plane.offset = 0.5 * (max_a + min_b);
  plane.margin = margin;
  return plane;
}

}  // namespace transversal
