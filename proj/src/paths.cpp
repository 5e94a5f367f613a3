#include "transversal/paths.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "transversal/error.hpp"

namespace transversal {

namespace {

// Root in (0, pi) of theta -> cos(theta) A + sin(theta) B with A > 0:
// the single angle where the tilted direction reaches the circle.
double arc_root(double a, double b) { return std::atan2(b, a) + M_PI / 2.0; }

Vec3 lift(const Vec2& w, const Vec3& e1, const Vec3& e2) { return w.x * e1 + w.y * e2; }

void validate_samples(const Family& f, const SpherePath& path) {
  const double tau = f.tol().tau;
  for (std::size_t i = 0; i < path.samples.size(); ++i) {
    double d = f.direction_depth(UnitVec3(path.samples[i])).depth;
    if (d > tau)
      throw Error(Errc::ValidationFailed,
                  "path sample " + std::to_string(i) + " is strictly transversal (depth " +
                      std::to_string(d) + ")");
  }
}

// Emit cos(t) v + sin(t) dir for t in [0, alpha], step <= kPathStep.
void emit_arc(std::vector<Vec3>& out, const Vec3& v, const Vec3& dir, double alpha) {
  int n = std::max(1, static_cast<int>(std::ceil(alpha / kPathStep)));
  out.push_back(v);  // first sample is the requested start, bit-exact
  for (int i = 1; i <= n; ++i) {
    double t = alpha * i / n;
    out.push_back((std::cos(t) * v + std::sin(t) * dir).normalized());
  }
}

struct FrameChoice {
  int k1, k2;   // body indices within the witness
  Vec2 axis;    // 2D direction of travel (the supporting line of k3)
  Vec3 normal;  // separator normal of (k1, k2), k1 on the negative side, v·n > 0
};

// Attempt the paper-free relabeling for a three-body witness: pick the body
// whose supporting halfplane faces the other two, so that in the frame with
// its boundary as horizontal axis the remaining supports open upward on
// opposite sides. Returns nullopt when no assignment is valid.
std::optional<FrameChoice> three_body_frame(const Family& f, const UnitVec3& v,
                                            const std::array<int, 3>& idx,
                                            const std::array<Vec2, 3>& w, double min_margin) {
  for (int c3 = 0; c3 < 3; ++c3) {
    Vec2 yhat = -w[c3];
    Vec2 xhat{yhat.y, -yhat.x};
    int a = (c3 + 1) % 3, b = (c3 + 2) % 3;
    if (w[a].dot(yhat) <= min_margin || w[b].dot(yhat) <= min_margin) continue;
    double xa = w[a].dot(xhat), xb = w[b].dot(xhat);
    if (xa * xb >= 0 || std::fabs(xa) <= min_margin || std::fabs(xb) <= min_margin) continue;

    int k1 = xa > 0 ? a : b;  // support normal on the positive axis side
    int k2 = xa > 0 ? b : a;
    int lo = std::min(idx[k1], idx[k2]), hi = std::max(idx[k1], idx[k2]);
    Vec3 n = f.separator(lo, hi).normal.v;
    if (idx[k1] != lo) n = -n;  // orient with k1 on the negative side
    if (v.dot(n) < 0) {
      std::swap(k1, k2);
      n = -n;
      xhat = -xhat;
    }
    FrameChoice fc;
    fc.k1 = idx[k1];
    fc.k2 = idx[k2];
    fc.axis = xhat;
    fc.normal = n;
    return fc;
  }
  return std::nullopt;
}

int circle_containing(const GreatCircleSet& y, const Vec3& u, double tol) {
  for (std::size_t i = 0; i < y.circles.size(); ++i)
    if (std::fabs(u.dot(y.circles[i].normal.v)) <= tol) return static_cast<int>(i);
  return -1;
}

int circle_of_pair(const GreatCircleSet& y, int i, int j) {
  auto p = std::minmax(i, j);
  for (std::size_t k = 0; k < y.circles.size(); ++k)
    if (y.circles[k].pair == std::make_pair(p.first, p.second)) return static_cast<int>(k);
  return -1;
}

SpherePath constant_path(const Family&, const UnitVec3& v, const GreatCircleSet& y, int circle) {
  SpherePath path;
  path.case_tag = PathCase::Constant;
  path.end_circle = circle;
  path.samples.push_back(v.v);
  const Vec3 n = y.circles[circle].normal.v;
  if (std::fabs(v.dot(n)) > 1e-9) {
    Vec3 snapped = (v.v - v.dot(n) * n).normalized();
    path.samples.push_back(snapped);
  }
  path.stop_angle = 0.0;
  return path;
}

// Two-body construction: tilt v toward the witness body that sits on the
// negative side of the pair's separating plane, stopping on that plane's
// great circle.
std::optional<SpherePath> try_pair_path(const Family& f, const UnitVec3& v,
                                        const GreatCircleSet& y, int i, int j,
                                        const HellyWitness& wit) {
  const double tau_sep = f.tol().tau_sep;
  Vec3 n = f.separator(i, j).normal.v;  // body i on the negative side
  int k1 = i, k2 = j;

  if (std::fabs(v.dot(n)) <= tau_sep) {
    SpherePath p = constant_path(f, v, y, circle_of_pair(y, i, j));
    p.witness = wit;
    return p;
  }
  if (v.dot(n) < 0) {
    n = -n;
    std::swap(k1, k2);
  }

  auto [e1, e2] = orthonormal_basis(v);
  Poly2 p1 = project(f.body(k1), v);
  Poly2 p2 = project(f.body(k2), v);
  MarginDir sep = max_margin_direction(p2, p1);  // k1's projection on the positive side
  if (sep.gap < -4.0 * f.tol().tau) return std::nullopt;  // projections genuinely overlap

  Vec3 m3 = lift(sep.dir, e1, e2);
  double alpha = arc_root(v.dot(n), m3.dot(n));

  SpherePath path;
  path.case_tag = PathCase::TwoBody;
  path.witness = wit;
  path.stop_angle = alpha;
  path.end_circle = circle_of_pair(y, i, j);
  emit_arc(path.samples, v.v, m3, alpha);
  validate_samples(f, path);
  return path;
}

std::optional<SpherePath> try_triple_path(const Family& f, const UnitVec3& v,
                                          const GreatCircleSet& y, const std::array<int, 3>& idx,
                                          const HellyWitness& wit) {
  // Concurrence point of the three supporting halfplanes: the depth optimizer
  // of the three projections.
  std::vector<Poly2> polys = {project(f.body(idx[0]), v), project(f.body(idx[1]), v),
                              project(f.body(idx[2]), v)};
  DepthResult d = common_depth(polys, kDefaultLpSeed, 10.0 * f.diameter() + 1.0);

  std::array<Vec2, 3> w;
  for (int k = 0; k < 3; ++k) {
    Poly2 point;
    point.v.push_back(d.witness);
    w[k] = max_margin_direction(point, polys[k]).dir;  // halfplane of body k at the optimizer
  }

  auto frame = three_body_frame(f, v, idx, w, 1e-7);
  if (!frame) return std::nullopt;

  const Vec3 n = frame->normal;
  if (std::fabs(v.dot(n)) <= f.tol().tau_sep) {
    SpherePath p = constant_path(f, v, y, circle_of_pair(y, frame->k1, frame->k2));
    p.witness = wit;
    return p;
  }

  auto [e1, e2] = orthonormal_basis(v);
  Vec3 e3 = lift(frame->axis, e1, e2);
  double beta = arc_root(v.dot(n), e3.dot(n));

  SpherePath path;
  path.case_tag = PathCase::ThreeBody;
  path.witness = wit;
  path.stop_angle = beta;
  path.end_circle = circle_of_pair(y, frame->k1, frame->k2);
  emit_arc(path.samples, v.v, e3, beta);
  validate_samples(f, path);
  return path;
}

}  // namespace

UnitVec3 refine_to_boundary(const Family& f, const UnitVec3& v, const UnitVec3& w) {
  const double tau = f.tol().tau;
  double dv = f.direction_depth(v).depth;
  double dw = f.direction_depth(w).depth;
  if (!(dv < -tau) || !(dw > tau))
    throw Error(Errc::NotBracketed, "needs depth(v) < -tau and depth(w) > tau (got " +
                                        std::to_string(dv) + ", " + std::to_string(dw) + ")");
  double lo = 0.0, hi = 1.0;  // lo on the non-transversal side
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    UnitVec3 u(slerp(v.v, w.v, mid));
    double d = f.direction_depth(u).depth;
    if (std::fabs(d) <= tau) return u;
    if (d < -tau)
      lo = mid;
    else
      hi = mid;
  }
  UnitVec3 u(slerp(v.v, w.v, 0.5 * (lo + hi)));
  if (std::fabs(f.direction_depth(u).depth) <= tau) return u;
  throw Error(Errc::NotBracketed, "bisection did not locate the boundary in 60 steps");
}

SpherePath build_boundary_path(const Family& f, const UnitVec3& v, const GreatCircleSet& y) {
  const double tau = f.tol().tau;
  double dv = f.direction_depth(v).depth;
  if (dv > tau)
    throw Error(Errc::StartTransversal,
                "start direction is strictly transversal (depth " + std::to_string(dv) + ")");

  HellyWitness wit = f.helly_witness(v);

  // Candidate witnesses in the canonical order: pairs first, then triples.
  std::vector<Poly2> polys;
  for (int i = 0; i < f.size(); ++i) polys.push_back(project(f.body(i), v));
  auto subset_depth = [&](std::initializer_list<int> idx) {
    std::vector<Poly2> sub;
    for (int i : idx) sub.push_back(polys[i]);
    return common_depth(sub, kDefaultLpSeed, 10.0 * f.diameter() + 1.0).depth;
  };

  std::string last_failure = "no usable witness subfamily";
  auto attempt = [&](const HellyWitness& cand) -> std::optional<SpherePath> {
    try {
      if (cand.indices.size() == 2)
        return try_pair_path(f, v, y, cand.indices[0], cand.indices[1], cand);
      std::array<int, 3> idx = {cand.indices[0], cand.indices[1], cand.indices[2]};
      auto p = try_triple_path(f, v, y, idx, cand);
      if (p) return p;
      // The construction also permits falling back to a separable pair
      // inside the triple.
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          double dp = subset_depth({idx[a], idx[b]});
          if (dp <= 4.0 * tau) {
            auto q = try_pair_path(f, v, y, idx[a], idx[b], cand);
            if (q) return q;
          }
        }
      return std::nullopt;
    } catch (const Error& e) {
      last_failure = e.what();
      return std::nullopt;
    }
  };

  if (auto p = attempt(wit)) return *p;

  // The primary witness did not yield a valid frame; scan the remaining
  // candidates in order.
  const int n = f.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dp = subset_depth({i, j});
      if (dp > tau) continue;
      if (auto p = attempt({{i, j}, dp})) return *p;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        double dp = subset_depth({i, j, k});
        if (dp > tau) continue;
        if (auto p = attempt({{i, j, k}, dp})) return *p;
      }
  throw Error(Errc::FrameDegenerate, last_failure);
}

SpherePath connect_to_separators(const Family& f, const UnitVec3& x, const GreatCircleSet& y) {
  if (y.circles.empty()) throw Error(Errc::EmptyInput, "no separating circles");
  const double tau = f.tol().tau;
  double dx = f.direction_depth(x).depth;
  if (dx > tau)
    throw Error(Errc::StartTransversal,
                "start direction is strictly transversal (depth " + std::to_string(dx) + ")");

  int on = circle_containing(y, x.v, 1e-6);
  if (on >= 0) return constant_path(f, x, y, on);

  if (std::fabs(dx) <= tau) return build_boundary_path(f, x, y);

  // March toward the nearest circle.
  int target = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < y.circles.size(); ++i) {
    double a = std::fabs(x.dot(y.circles[i].normal.v));
    if (a < best) {
      best = a;
      target = static_cast<int>(i);
    }
  }
  const Vec3 n = y.circles[target].normal.v;
  Vec3 foot = x.v - x.dot(n) * n;
  Vec3 b = foot.norm() > 1e-12 ? foot.normalized() : orthonormal_basis(UnitVec3(n)).first;
  // Great circle through x and its nearest point on the target circle.
  Vec3 tangent = (b - x.dot(b) * x.v).normalized();
  double total = angle_between(x.v, b);

  SpherePath path;
  path.case_tag = PathCase::GeodesicMarch;
  path.samples.push_back(x.v);

  double t = 0.0;
  Vec3 cur = x.v;
  while (true) {
    double step = std::min(kPathStep, total - t);
    double tn = t + step;
    Vec3 nxt = (std::cos(tn) * x.v + std::sin(tn) * tangent).normalized();

    // Crossing any circle of the set finishes the march on that circle.
    int hit = -1;
    double tc = tn;
    for (std::size_t i = 0; i < y.circles.size(); ++i) {
      const Vec3 cn = y.circles[i].normal.v;
      double fa = cur.dot(cn), fb = nxt.dot(cn);
      if (fa == 0.0 || (fa > 0) != (fb > 0)) {
        // root of cos(t)(x·cn) + sin(t)(tangent·cn) in (t, tn]
        double root = std::atan2(-x.dot(cn), tangent.dot(cn));
        while (root < t - 1e-12) root += M_PI;
        if (root <= tn + 1e-12 && (hit < 0 || root < tc)) {
          hit = static_cast<int>(i);
          tc = root;
        }
      }
    }
    if (hit >= 0) {
      const Vec3 cn = y.circles[hit].normal.v;
      Vec3 end = (std::cos(tc) * x.v + std::sin(tc) * tangent).normalized();
      end = (end - end.dot(cn) * cn).normalized();
      double dend = f.direction_depth(UnitVec3(end)).depth;
      if (dend > tau)
        throw Error(Errc::ValidationFailed, "march endpoint on a circle reads transversal");
      path.samples.push_back(end);
      path.stop_angle = tc;
      path.end_circle = hit;
      return path;
    }

    double dn = f.direction_depth(UnitVec3(nxt)).depth;
    if (dn > tau || std::fabs(dn) <= tau) {
      // Boundary reached: locate it precisely, then switch construction.
      UnitVec3 bpt = dn > tau ? refine_to_boundary(f, UnitVec3(cur), UnitVec3(nxt)) : UnitVec3(nxt);
      SpherePath tail = build_boundary_path(f, bpt, y);
      path.samples.insert(path.samples.end(), tail.samples.begin(), tail.samples.end());
      path.stop_angle = t + tail.stop_angle;
      path.end_circle = tail.end_circle;
      path.witness = tail.witness;
      return path;
    }

    path.samples.push_back(nxt);
    cur = nxt;
    t = tn;
    if (t >= total - 1e-12) {
      // Arrived at the target circle's nearest point.
      const Vec3 cn = y.circles[target].normal.v;
      Vec3 end = (cur - cur.dot(cn) * cn).normalized();
      if (f.direction_depth(UnitVec3(end)).depth > tau)
        throw Error(Errc::ValidationFailed, "march endpoint on a circle reads transversal");
      path.samples.push_back(end);
      path.stop_angle = t;
      path.end_circle = target;
      return path;
    }
  }
}

}  // namespace transversal
