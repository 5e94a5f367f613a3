#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace transversal {

// One inequality a·x <= b over up to 4 variables.
struct LpRow {
  std::array<double, 4> a{0, 0, 0, 0};
  double b = 0.0;
};

struct LpResult {
  bool feasible = false;
  std::array<double, 4> x{0, 0, 0, 0};
  double value = 0.0;  // c·x at the optimum
};

inline constexpr std::uint64_t kDefaultLpSeed = 0x51D3A7F0C0FFEEULL;

// Maximize c·x subject to the rows and the implicit box |x_i| <= bound.
// Randomized incremental (Seidel) solver for dim in {1,2,3,4}; the seed fixes
// the insertion order, so results are deterministic per (input, seed).
LpResult solve_lp_max(int dim, std::span<const double> c, std::span<const LpRow> rows,
                      double bound, std::uint64_t seed = kDefaultLpSeed);

// splitmix64; used to derive decorrelated deterministic seeds.
std::uint64_t mix_seed(std::uint64_t v);

}  // namespace transversal
