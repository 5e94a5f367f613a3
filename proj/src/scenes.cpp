#include "transversal/scenes.hpp"

#include <algorithm>
#include <cmath>

#include "transversal/error.hpp"
#include "transversal/lp.hpp"
#include "transversal/sphere_mesh.hpp"

namespace transversal {

namespace {

std::uint64_t next_bits(std::uint64_t& state) {
  state = mix_seed(state);
  return state;
}

double next_double(std::uint64_t& state) { return uniform_double(next_bits(state)); }

}  // namespace

double uniform_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Vec3 random_unit(std::uint64_t& state) {
  while (true) {
    Vec3 p{2.0 * next_double(state) - 1.0, 2.0 * next_double(state) - 1.0,
           2.0 * next_double(state) - 1.0};
    double n2 = p.norm2();
    if (n2 > 1e-8 && n2 <= 1.0) return p * (1.0 / std::sqrt(n2));
  }
}

CantorSpec CantorSpec::make(int stage, int samples_per_interval) {
  if (stage < 0) throw Error(Errc::BadArgument, "negative stage");
  if (samples_per_interval < 2) throw Error(Errc::BadArgument, "need >= 2 samples per interval");
  CantorSpec spec;
  spec.stage = stage;
  spec.samples_per_interval = samples_per_interval;
  spec.intervals = {{1.0, 2.0}};
  for (int s = 0; s < stage; ++s) {
    std::vector<std::pair<double, double>> next;
    next.reserve(spec.intervals.size() * 2);
    for (auto [a, b] : spec.intervals) {
      double third = (b - a) / 3.0;
      next.push_back({a, a + third});
      next.push_back({b - third, b});
    }
    spec.intervals = std::move(next);
  }
  return spec;
}

std::vector<ConvexBody> ruled_segments() {
  std::vector<ConvexBody> out;
  for (int i = 1; i <= 3; ++i) {
    ConvexBody s;
    s.label = "S" + std::to_string(i);
    double d = static_cast<double>(i);
    s.vertices = {{d, 1.0, d}, {d, 2.0, 2.0 * d}};
    out.push_back(std::move(s));
  }
  return out;
}

Vec3 hyperbola_point(double c) {
  if (c < 1.0 || c > 2.0)
    throw Error(Errc::OutOfRange, "hyperbola parameter must be in [1, 2], got " + std::to_string(c));
  return {1.0 / (c - 4.0), c, c / (c - 4.0)};
}

Family cantor_family(const CantorSpec& spec) {
  std::vector<ConvexBody> bodies = ruled_segments();
  ConvexBody s4;
  s4.label = "S4";
  for (auto [a, b] : spec.intervals) {
    for (int k = 0; k < spec.samples_per_interval; ++k) {
      double c = a + (b - a) * k / (spec.samples_per_interval - 1);
      s4.vertices.push_back(hyperbola_point(c));
    }
  }
  bodies.push_back(std::move(s4));
  try {
    return Family(std::move(bodies));
  } catch (const Error& e) {
    throw Error(Errc::DisjointnessFailure, e.what());
  }
}

std::vector<std::pair<double, double>> probe_direction_curve(const Family& f,
                                                             std::span<const double> b_grid) {
  std::vector<std::pair<double, double>> out(b_grid.size());
  const auto n = static_cast<std::ptrdiff_t>(b_grid.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double b = b_grid[i];
    UnitVec3 d(Vec3{1.0, 0.0, b});
    out[i] = {b, f.direction_depth(d, mix_seed(static_cast<std::uint64_t>(i))).depth};
  }
  return out;
}

int cluster_count(const std::vector<std::pair<double, double>>& probe, double tau_curve,
                  double gap_threshold) {
  std::vector<double> hits;
  for (auto [b, depth] : probe)
    if (depth >= -tau_curve) hits.push_back(b);
  if (hits.empty()) return 0;
  std::sort(hits.begin(), hits.end());
  int clusters = 1;
  for (std::size_t i = 1; i < hits.size(); ++i)
    if (hits[i] - hits[i - 1] > gap_threshold) ++clusters;
  return clusters;
}

Family inflate(const Family& f, double eps) {
  double limit = 0.5 * f.min_separator_margin();
  if (!(eps > 0.0) || eps >= limit)
    throw Error(Errc::EpsTooLarge, "eps must lie in (0, " + std::to_string(limit) +
                                       "), got " + std::to_string(eps));
  static const std::vector<Vec3> dirs = build_mesh(1).vertices;  // 42 directions
  std::vector<ConvexBody> bodies;
  bodies.reserve(f.size());
  for (const ConvexBody& b : f.bodies()) {
    ConvexBody nb;
    nb.label = b.label;
    nb.vertices.reserve(b.vertices.size() * dirs.size());
    for (const Vec3& p : b.vertices)
      for (const Vec3& u : dirs) nb.vertices.push_back(p + eps * u);
    bodies.push_back(std::move(nb));
  }
  return Family(std::move(bodies));
}

Family random_disjoint_family(int n, std::uint64_t seed) {
  if (n < 2 || n > 12) throw Error(Errc::BadArgument, "family size must be in [2, 12]");
  const double box = 6.0;  // placement cube [-box, box]^3
  const double min_margin = 0.05 * 2.0 * box * std::sqrt(3.0);

  std::uint64_t state = mix_seed(seed ^ 0xC0FFEEULL);
  std::vector<ConvexBody> bodies;
  int attempts = 0;

  while (static_cast<int>(bodies.size()) < n) {
    if (++attempts > 10000)
      throw Error(Errc::PlacementFailure, "could not place " + std::to_string(n) +
                                              " bodies with the required margins");
    Vec3 center{box * (2.0 * next_double(state) - 1.0), box * (2.0 * next_double(state) - 1.0),
                box * (2.0 * next_double(state) - 1.0)};
    int nv = 8 + static_cast<int>(next_bits(state) % 13);
    double radius = 0.5 + 0.5 * next_double(state);
    ConvexBody b;
    b.label = "B" + std::to_string(bodies.size());
    for (int k = 0; k < nv; ++k) b.vertices.push_back(center + radius * random_unit(state));

    bool ok = true;
    for (const ConvexBody& other : bodies) {
      HullDistance hd = hull_distance(other.vertices, b.vertices);
      if (0.5 * hd.distance <= min_margin) {
        ok = false;
        break;
      }
    }
    if (ok) bodies.push_back(std::move(b));
  }
  return Family(std::move(bodies));
}

}  // namespace transversal
