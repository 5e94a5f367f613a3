#include "transversal/lp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace transversal {

namespace {

constexpr double kTinyCoeff = 1e-13;

double row_dot(const LpRow& r, const std::array<double, 4>& x, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += r.a[i] * x[i];
  return s;
}

// Scale so that ||a||_2 = 1; rows with a ~ 0 are kept as 0 <= b sentinels.
void normalize_row(LpRow& r, int dim) {
  double n2 = 0.0;
  for (int i = 0; i < dim; ++i) n2 += r.a[i] * r.a[i];
  double n = std::sqrt(n2);
  if (n < kTinyCoeff) return;
  for (int i = 0; i < dim; ++i) r.a[i] /= n;
  r.b /= n;
}

struct Solver {
  double bound;
  double feas_eps;
  std::mt19937_64 rng;

  // Maximize c·x over rows plus |x_i| <= bound, dim >= 1.
  LpResult solve(int dim, std::array<double, 4> c, std::vector<LpRow>& rows) {
    if (dim == 1) return solve_1d(c[0], rows);

    for (std::size_t i = rows.size(); i > 1; --i) {
      std::size_t j = rng() % i;
      std::swap(rows[i - 1], rows[j]);
    }

    LpResult res;
    res.feasible = true;
    for (int i = 0; i < dim; ++i)
      res.x[i] = c[i] > 0 ? bound : (c[i] < 0 ? -bound : 0.0);

    for (std::size_t k = 0; k < rows.size(); ++k) {
      const LpRow& h = rows[k];
      if (row_dot(h, res.x, dim) <= h.b + feas_eps) continue;

      int p = 0;
      for (int i = 1; i < dim; ++i)
        if (std::fabs(h.a[i]) > std::fabs(h.a[p])) p = i;
      if (std::fabs(h.a[p]) < kTinyCoeff) return {};  // violated 0 <= b

      // Substitute x_p out of the objective and the processed rows, then
      // solve on the hyperplane a_h·x = b_h.
      std::vector<LpRow> sub;
      sub.reserve(k + 2);
      bool infeasible = false;
      auto push_projected = [&](const LpRow& g) {
        LpRow s;
        double f = g.a[p] / h.a[p];
        int j = 0;
        for (int i = 0; i < dim; ++i) {
          if (i == p) continue;
          s.a[j++] = g.a[i] - f * h.a[i];
        }
        s.b = g.b - f * h.b;
        normalize_row(s, dim - 1);
        double n2 = 0.0;
        for (int i = 0; i < dim - 1; ++i) n2 += s.a[i] * s.a[i];
        if (n2 < kTinyCoeff * kTinyCoeff) {
          if (s.b < -feas_eps) infeasible = true;
          return;
        }
        sub.push_back(s);
      };

      for (std::size_t j = 0; j < k; ++j) push_projected(rows[j]);
      LpRow upper, lower;  // |x_p| <= bound as ordinary rows
      upper.a[p] = 1.0;
      upper.b = bound;
      lower.a[p] = -1.0;
      lower.b = bound;
      push_projected(upper);
      push_projected(lower);
      if (infeasible) return {};

      std::array<double, 4> sc{0, 0, 0, 0};
      {
        double f = c[p] / h.a[p];
        int j = 0;
        for (int i = 0; i < dim; ++i) {
          if (i == p) continue;
          sc[j++] = c[i] - f * h.a[i];
        }
      }

      LpResult sr = solve(dim - 1, sc, sub);
      if (!sr.feasible) return {};

      std::array<double, 4> nx{0, 0, 0, 0};
      int j = 0;
      double acc = h.b;
      for (int i = 0; i < dim; ++i) {
        if (i == p) continue;
        nx[i] = sr.x[j++];
        acc -= h.a[i] * nx[i];
      }
      nx[p] = acc / h.a[p];
      res.x = nx;
    }

    res.value = 0.0;
    for (int i = 0; i < dim; ++i) res.value += c[i] * res.x[i];
    return res;
  }

  LpResult solve_1d(double c, const std::vector<LpRow>& rows) {
    double lo = -bound, hi = bound;
    for (const LpRow& r : rows) {
      if (r.a[0] > kTinyCoeff)
        hi = std::min(hi, r.b / r.a[0]);
      else if (r.a[0] < -kTinyCoeff)
        lo = std::max(lo, r.b / r.a[0]);
      else if (r.b < -feas_eps)
        return {};
    }
    if (lo > hi + feas_eps) return {};
    if (lo > hi) lo = hi = 0.5 * (lo + hi);
    LpResult res;
    res.feasible = true;
    res.x[0] = c > 0 ? hi : (c < 0 ? lo : std::clamp(0.0, lo, hi));
    res.value = c * res.x[0];
    return res;
  }
};

}  // namespace

std::uint64_t mix_seed(std::uint64_t v) {
  v += 0x9E3779B97F4A7C15ULL;
  v = (v ^ (v >> 30)) * 0xBF58476D1CE4E5B9ULL;
  v = (v ^ (v >> 27)) * 0x94D049BB133111EBULL;
  return v ^ (v >> 31);
}

LpResult solve_lp_max(int dim, std::span<const double> c, std::span<const LpRow> rows,
                      double bound, std::uint64_t seed) {
  Solver s;
  s.bound = bound;
  s.feas_eps = 1e-11 * std::max(1.0, bound);
  s.rng.seed(seed);

  std::vector<LpRow> work(rows.begin(), rows.end());
  for (LpRow& r : work) normalize_row(r, dim);

  std::array<double, 4> cc{0, 0, 0, 0};
  for (int i = 0; i < dim && i < static_cast<int>(c.size()); ++i) cc[i] = c[i];
  return s.solve(dim, cc, work);
}

}  // namespace transversal
