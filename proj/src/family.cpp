#include "transversal/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "transversal/error.hpp"

namespace transversal {

namespace {

double scene_diameter(const std::vector<ConvexBody>& bodies) {
  Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
  Vec3 hi = -lo;
  for (const ConvexBody& b : bodies)
    for (const Vec3& p : b.vertices) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      lo.z = std::min(lo.z, p.z);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
      hi.z = std::max(hi.z, p.z);
    }
  return (hi - lo).norm();
}

}  // namespace

Family::Family(std::vector<ConvexBody> bodies, ToleranceOverrides ov)
    : bodies_(std::move(bodies)) {
  if (bodies_.size() < 2) throw Error(Errc::BadArgument, "a family needs at least two bodies");
  for (const ConvexBody& b : bodies_)
    if (b.vertices.empty()) throw Error(Errc::EmptyInput, "body '" + b.label + "' has no vertices");

  diameter_ = scene_diameter(bodies_);
  tol_.tau = ov.tau.value_or(1e-7 * diameter_);
  tol_.tau_sep = ov.tau_sep.value_or(tol_.tau);
  tol_.tau_line = ov.tau_line.value_or(tol_.tau);
  tol_.tau_curve = ov.tau_curve.value_or(1e-4 * diameter_);

  const int n = size();
  separators_.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      separators_.push_back(strict_separator(bodies_[i], bodies_[j], tol_.tau_sep));
}

int Family::pair_index(int i, int j) const {
  const int n = size();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

const Plane3& Family::separator(int i, int j) const { return separators_[pair_index(i, j)]; }

double Family::min_separator_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Plane3& p : separators_) m = std::min(m, p.margin);
  return m;
}

DepthResult Family::direction_depth(const UnitVec3& v, std::uint64_t seed) const {
  std::vector<Poly2> polys;
  polys.reserve(bodies_.size());
  for (const ConvexBody& b : bodies_) polys.push_back(project(b, v));
  return common_depth(polys, seed, 10.0 * diameter_ + 1.0);
}

Label Family::classify_depth(double depth) const {
  if (depth > tol_.tau) return Label::Transversal;
  if (depth < -tol_.tau) return Label::NonTransversal;
  return Label::Ambiguous;
}

std::optional<Poly2> Family::fiber_polygon(const UnitVec3& v) const {
  DepthResult d = direction_depth(v);
  if (d.depth <= tol_.tau) return std::nullopt;

  std::vector<Poly2> polys;
  polys.reserve(bodies_.size());
  for (const ConvexBody& b : bodies_) polys.push_back(project(b, v));

  Poly2 acc = polys[0];
  std::vector<Halfplane> hs;
  for (std::size_t i = 1; i < polys.size(); ++i) {
    hs.clear();
    append_halfplanes(polys[i], hs);
    for (const Halfplane& h : hs) {
      acc = clip(acc, h);
      if (acc.empty()) return acc;  // numerically possible only at depth ~ tau
    }
  }
  std::vector<Vec2> pts = acc.v;
  return convex_hull(std::move(pts));
}

GreatCircleSet Family::separating_circles() const {
  GreatCircleSet y;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      y.circles.push_back({separator(i, j).normal, {i, j}});
  return y;
}

HellyWitness Family::helly_witness(const UnitVec3& v) const {
  DepthResult full = direction_depth(v);
  if (full.depth > tol_.tau)
    throw Error(Errc::NoWitness, "direction is strictly transversal (depth " +
                                     std::to_string(full.depth) + ")");

  std::vector<Poly2> polys;
  polys.reserve(bodies_.size());
  for (const ConvexBody& b : bodies_) polys.push_back(project(b, v));

  const int n = size();
  auto subset_depth = [&](std::initializer_list<int> idx) {
    std::vector<Poly2> sub;
    for (int i : idx) sub.push_back(polys[i]);
    return common_depth(sub, kDefaultLpSeed, 10.0 * diameter_ + 1.0).depth;
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = subset_depth({i, j});
      if (d <= tol_.tau) return {{i, j}, d};
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        double d = subset_depth({i, j, k});
        if (d <= tol_.tau) return {{i, j, k}, d};
      }
  throw Error(Errc::NoWitness, "no pair or triple witness found; tolerance too tight?");
}

bool is_line_transversal(std::span<const ConvexBody> bodies, const DirectedLine& l,
                         double tau_line) {
  auto [e1, e2] = orthonormal_basis(l.direction);
  Vec2 q{l.origin.dot(e1), l.origin.dot(e2)};
  for (const ConvexBody& b : bodies) {
    Poly2 p = project(b, l.direction);
    if (distance(p, q) >= tau_line) return false;
  }
  return true;
}

bool Family::is_line_transversal(const DirectedLine& l) const {
  return transversal::is_line_transversal(bodies_, l, tol_.tau_line);
}

std::optional<std::pair<double, double>> line_body_interval(const ConvexBody& body,
                                                            const DirectedLine& l,
                                                            double tau_line) {
  const Vec3& d = l.direction.v;
  double t_lo = std::numeric_limits<double>::infinity();
  double t_hi = -t_lo;
  for (const Vec3& p : body.vertices) {
    double t = (p - l.origin).dot(d);
    t_lo = std::min(t_lo, t);
    t_hi = std::max(t_hi, t);
  }

  auto f = [&](double t) { return point_hull_distance(l.origin + t * d, body.vertices); };

  // f is convex along the line; golden-section for the minimizer.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = t_lo, b = t_hi;
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = f(c1), f2 = f(c2);
  for (int it = 0; it < 90; ++it) {
    if (f1 < f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = f(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = f(c2);
    }
  }
  double t_min = 0.5 * (a + b);
  double f_min = f(t_min);
  if (f_min >= tau_line) return std::nullopt;

  // Crossing level just above the minimum; on each side of the minimizer the
  // convex profile crosses it exactly once.
  double level = f_min + std::max(1e-12, 1e-9 * std::max(1.0, t_hi - t_lo));
  auto bisect = [&](double inside, double outside) {
    for (int it = 0; it < 80; ++it) {
      double m = 0.5 * (inside + outside);
      if (f(m) <= level)
        inside = m;
      else
        outside = m;
    }
    return inside;
  };
  double pad = std::max(1.0, t_hi - t_lo);
  double entry = f(t_lo) <= level ? t_lo : bisect(t_min, t_lo - 1e-3 * pad);
  double exit = f(t_hi) <= level ? t_hi : bisect(t_min, t_hi + 1e-3 * pad);
  return std::make_pair(entry, exit);
}

std::vector<int> Family::geometric_permutation(const DirectedLine& l) const {
  if (!is_line_transversal(l))
    throw Error(Errc::NotTransversal, "line is not a transversal of the family");

  std::vector<std::pair<double, int>> params;
  params.reserve(bodies_.size());
  for (int i = 0; i < size(); ++i) {
    auto iv = line_body_interval(bodies_[i], {l.origin, l.direction}, tol_.tau_line);
    if (!iv) throw Error(Errc::NotTransversal, "line misses body " + std::to_string(i));
    auto [entry, exit] = *iv;
    double t = (exit - entry < tol_.tau) ? 0.5 * (entry + exit) : entry;
    params.push_back({t, i});
  }
  std::sort(params.begin(), params.end());
  std::vector<int> order;
  order.reserve(params.size());
  for (auto& [t, i] : params) order.push_back(i);
  return order;
}

DirectedLine Family::transversal_line(const UnitVec3& v) const {
  DepthResult d = direction_depth(v);
  if (d.depth <= tol_.tau)
    throw Error(Errc::NotTransversal, "no transversal line in this direction");
  auto [e1, e2] = orthonormal_basis(v);
  return {d.witness.x * e1 + d.witness.y * e2, v};
}

}  // namespace transversal
