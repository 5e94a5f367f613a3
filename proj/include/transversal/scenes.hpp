#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "transversal/family.hpp"

namespace transversal {

// Finite stage of the middle-thirds construction rescaled to [1, 2].
struct CantorSpec {
  int stage = 0;
  int samples_per_interval = 8;
  std::vector<std::pair<double, double>> intervals;

  static CantorSpec make(int stage, int samples_per_interval);
};

// Three skew segments on the doubly ruled surface z = xy: the vertical
// rulings at x = 1, 2, 3 clipped to y in [1, 2].
std::vector<ConvexBody> ruled_segments();

// Point (1/(c-4), c, c/(c-4)); lies on z = xy, on the hyperbola x(y-4) = 1,
// and in the plane z = 4x + 1. Requires c in [1, 2].
Vec3 hyperbola_point(double c);

// The three ruled segments plus the hull of hyperbola points sampled on the
// spec's intervals. The transversal directions of the result trace the curve
// (1, 0, b) over the sampled parameter set.
Family cantor_family(const CantorSpec& spec);

// Depth of the family at the direction (1, 0, b)/|(1, 0, b)| per grid value.
std::vector<std::pair<double, double>> probe_direction_curve(const Family& f,
                                                             std::span<const double> b_grid);

// Number of gap-separated clusters among {b : depth(b) >= -tau_curve}.
int cluster_count(const std::vector<std::pair<double, double>>& probe, double tau_curve,
                  double gap_threshold);

// Minkowski sum of every body with a ball of radius eps, realized by a fixed
// 42-direction sphere sample. Requires 0 < eps < half the minimum pairwise
// separator margin.
Family inflate(const Family& f, double eps);

// n random disjoint polytopes (8-20 vertices each), rejection-sampled until
// all pairwise margins exceed 5% of the placement-box diagonal.
// Deterministic per seed; 2 <= n <= 12.
Family random_disjoint_family(int n, std::uint64_t seed);

// Portable deterministic helpers shared by generators and tests.
double uniform_double(std::uint64_t bits);  // maps rng() output into [0,1)
Vec3 random_unit(std::uint64_t& state);     // splitmix-driven

}  // namespace transversal
