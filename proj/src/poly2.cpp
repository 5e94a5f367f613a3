#include "transversal/poly2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace transversal {

namespace {

double cross3(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a - o).cross(b - o);
}

double coord_span(const std::vector<Vec2>& pts) {
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Vec2& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::max(hi_x - lo_x, hi_y - lo_y);
}

}  // namespace

Poly2 convex_hull(std::vector<Vec2> pts) {
  if (pts.empty()) return {};
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return {std::move(pts)};

  double span = coord_span(pts);
  double eps = 1e-12 * span * span;

  std::vector<Vec2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross3(h[k - 2], h[k - 1], pts[i]) <= eps) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return {std::move(h)};
}

void append_halfplanes(const Poly2& p, std::vector<Halfplane>& out) {
  const auto& v = p.v;
  if (v.empty()) return;
  if (v.size() == 1) {
    out.push_back({{1, 0}, v[0].x});
    out.push_back({{-1, 0}, -v[0].x});
    out.push_back({{0, 1}, v[0].y});
    out.push_back({{0, -1}, -v[0].y});
    return;
  }
  if (v.size() == 2) {
    Vec2 d = (v[1] - v[0]).normalized();
    Vec2 n = d.perp();
    out.push_back({n, n.dot(v[0])});
    out.push_back({-n, -n.dot(v[0])});
    out.push_back({d, d.dot(v[0])});
    out.push_back({-d, -d.dot(v[1])});
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    Vec2 n = (b - a).perp().normalized();  // inward for CCW order
    out.push_back({n, n.dot(a)});
  }
}

bool contains(const Poly2& p, const Vec2& q, double tol) {
  std::vector<Halfplane> hs;
  append_halfplanes(p, hs);
  for (const Halfplane& h : hs)
    if (h.clearance(q) < -tol) return false;
  return !hs.empty();
}

double distance(const Poly2& p, const Vec2& q) {
  const auto& v = p.v;
  if (v.empty()) return std::numeric_limits<double>::infinity();
  if (v.size() == 1) return (q - v[0]).norm();

  auto seg_dist = [&](const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = ab.dot(ab);
    double t = len2 > 0 ? std::clamp((q - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return (q - (a + t * ab)).norm();
  };

  if (v.size() == 2) return seg_dist(v[0], v[1]);

  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    if (cross3(a, b, q) < 0) inside = false;
    best = std::min(best, seg_dist(a, b));
  }
  return inside ? 0.0 : best;
}

Poly2 clip(const Poly2& subject, const Halfplane& h) {
  const auto& v = subject.v;
  if (v.empty()) return {};
  double span = coord_span(v);
  double eps = 1e-12 * std::max(span, 1.0);

  Poly2 out;
  const std::size_t n = v.size();
  if (n == 1) {
    if (h.clearance(v[0]) >= -eps) out.v.push_back(v[0]);
    return out;
  }
  if (n == 2) {  // open segment, no wrap-around edge
    double ca = h.clearance(v[0]);
    double cb = h.clearance(v[1]);
    if (ca >= -eps) out.v.push_back(v[0]);
    if ((ca > eps && cb < -eps) || (ca < -eps && cb > eps))
      out.v.push_back(v[0] + (ca / (ca - cb)) * (v[1] - v[0]));
    if (cb >= -eps) out.v.push_back(v[1]);
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % n];
    double ca = h.clearance(a);
    double cb = h.clearance(b);
    if (ca >= -eps) out.v.push_back(a);
    if ((ca > eps && cb < -eps) || (ca < -eps && cb > eps)) {
      double t = ca / (ca - cb);
      out.v.push_back(a + t * (b - a));
    }
  }
  return out;
}

bool is_convex_ccw(const Poly2& p, double eps) {
  const auto& v = p.v;
  if (v.size() < 3) return true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    const Vec2& c = v[(i + 2) % v.size()];
    if (cross3(a, b, c) < -eps) return false;
  }
  return true;
}

MarginDir max_margin_direction(const Poly2& low, const Poly2& high) {
  auto gap_at = [&](double phi) {
    Vec2 w{std::cos(phi), std::sin(phi)};
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : high.v) mn = std::min(mn, w.dot(p));
    for (const Vec2& p : low.v) mx = std::max(mx, w.dot(p));
    return mn - mx;
  };

  constexpr int kScan = 2048;
  double best_phi = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    double phi = 2.0 * M_PI * i / kScan;
    double g = gap_at(phi);
    if (g > best) {
      best = g;
      best_phi = phi;
    }
  }
  double lo = best_phi - 2.0 * M_PI / kScan;
  double hi = best_phi + 2.0 * M_PI / kScan;
  for (int it = 0; it < 90; ++it) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (gap_at(m1) < gap_at(m2))
      lo = m1;
    else
      hi = m2;
  }
  double phi = 0.5 * (lo + hi);
  return {{std::cos(phi), std::sin(phi)}, gap_at(phi)};
}

}  // namespace transversal
