#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

namespace transversal {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }

  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 perp() const { return {-y, x}; }  // rotate +90 degrees
  Vec2 normalized() const {
    double n = norm();
    return n > 0 ? Vec2{x / n, y / n} : Vec2{0, 0};
  }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Vec3 normalized() const {
    double n = norm();
    return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{0, 0, 0};
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Direction on the unit sphere. Construction normalizes, so the invariant
// |norm - 1| <= 1e-12 holds for any finite nonzero input.
struct UnitVec3 {
  Vec3 v{0, 0, 1};

  UnitVec3() = default;
  explicit UnitVec3(const Vec3& w) : v(w.normalized()) {}
  UnitVec3(double x, double y, double z) : UnitVec3(Vec3{x, y, z}) {}

  operator const Vec3&() const { return v; }
  double dot(const Vec3& o) const { return v.dot(o); }
  UnitVec3 operator-() const {
    UnitVec3 u;
    u.v = -v;
    return u;
  }
};

// Deterministic right-handed frame (e1, e2, v): e1 x e2 = v, and
// (0,0,1) maps to the canonical ((1,0,0),(0,1,0)).
inline std::pair<Vec3, Vec3> orthonormal_basis(const UnitVec3& u) {
  const Vec3& v = u.v;
  const double sign = std::copysign(1.0, v.z);
  const double a = -1.0 / (sign + v.z);
  const double b = v.x * v.y * a;
  Vec3 e1{1.0 + sign * v.x * v.x * a, sign * b, -sign * v.x};
  Vec3 e2{b, sign + v.y * v.y * a, -v.y};
  return {e1, e2};
}

// Spherical interpolation between unit vectors; t in [0,1].
inline Vec3 slerp(const Vec3& a, const Vec3& b, double t) {
  double c = std::clamp(a.dot(b), -1.0, 1.0);
  double omega = std::acos(c);
  if (omega < 1e-12) return ((1.0 - t) * a + t * b).normalized();
  double s = std::sin(omega);
  return ((std::sin((1.0 - t) * omega) / s) * a + (std::sin(t * omega) / s) * b).normalized();
}

inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::acos(std::clamp(a.normalized().dot(b.normalized()), -1.0, 1.0));
}

}  // namespace transversal
