#include "transversal/sphere_mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <unordered_map>

#include "transversal/error.hpp"

namespace transversal {

namespace {

struct VecKey {
  std::uint64_t a, b, c;
  bool operator==(const VecKey&) const = default;
};

struct VecKeyHash {
  std::size_t operator()(const VecKey& k) const {
    std::uint64_t h = k.a * 0x9E3779B97F4A7C15ULL;
    h ^= k.b + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= k.c + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

VecKey key_of(const Vec3& v) {
  // Collapse -0.0 so exact negations of zero coordinates still match.
  double x = v.x == 0.0 ? 0.0 : v.x;
  double y = v.y == 0.0 ? 0.0 : v.y;
  double z = v.z == 0.0 ? 0.0 : v.z;
  VecKey k;
  std::memcpy(&k.a, &x, 8);
  std::memcpy(&k.b, &y, 8);
  std::memcpy(&k.c, &z, 8);
  return k;
}

}  // namespace

SphereMesh build_mesh(int level) {
  if (level < 0 || level > 9)
    throw Error(Errc::LevelOutOfRange, "mesh level must be in [0, 9], got " + std::to_string(level));

  SphereMesh m;
  m.level = level;

  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double s = 1.0 / std::sqrt(1.0 + phi * phi);
  const double one = s, gold = phi * s;
  // The icosahedral point set is centrally symmetric (0<->3, 1<->2, 4<->7,
  // 5<->6, 8<->11, 9<->10); the antipode tables below are built by lookup.
  m.vertices = {
      {-one, gold, 0}, {one, gold, 0},  {-one, -gold, 0}, {one, -gold, 0},
      {0, -one, gold}, {0, one, gold},  {0, -one, -gold}, {0, one, -gold},
      {gold, 0, -one}, {gold, 0, one},  {-gold, 0, -one}, {-gold, 0, one},
  };
  m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},  {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},  {3, 4, 2},  {3, 2, 6},  {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> midpoint;
    std::vector<std::array<int, 3>> next;
    next.reserve(m.faces.size() * 4);
    auto mid = [&](int a, int b) {
      auto k = std::minmax(a, b);
      auto it = midpoint.find(k);
      if (it != midpoint.end()) return it->second;
      Vec3 p = (m.vertices[a] + m.vertices[b]).normalized();
      int idx = static_cast<int>(m.vertices.size());
      m.vertices.push_back(p);
      midpoint.emplace(k, idx);
      return idx;
    };
    for (const auto& f : m.faces) {
      int ab = mid(f[0], f[1]);
      int bc = mid(f[1], f[2]);
      int ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    m.faces = std::move(next);
  }

  // Edge tables.
  std::map<std::pair<int, int>, int> edge_index;
  m.face_edges.assign(m.faces.size(), {-1, -1, -1});
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    for (int e = 0; e < 3; ++e) {
      int a = m.faces[f][e], b = m.faces[f][(e + 1) % 3];
      auto k = std::minmax(a, b);
      auto it = edge_index.find(k);
      int idx;
      if (it == edge_index.end()) {
        idx = static_cast<int>(m.edge_verts.size());
        edge_index.emplace(k, idx);
        m.edge_verts.push_back({k.first, k.second});
        m.edge_faces.push_back({static_cast<int>(f), -1});
      } else {
        idx = it->second;
        m.edge_faces[idx][1] = static_cast<int>(f);
      }
      m.face_edges[f][e] = idx;
    }
  }
  m.face_neighbors.assign(m.faces.size(), {-1, -1, -1});
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    for (int e = 0; e < 3; ++e) {
      auto [fa, fb] = m.edge_faces[m.face_edges[f][e]];
      m.face_neighbors[f][e] = (fa == static_cast<int>(f)) ? fb : fa;
    }

  // Antipodal tables by exact bit lookup (negation is exact).
  std::unordered_map<VecKey, int, VecKeyHash> vmap;
  vmap.reserve(m.vertices.size() * 2);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) vmap.emplace(key_of(m.vertices[i]), i);
  m.vertex_antipode.assign(m.vertices.size(), -1);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    auto it = vmap.find(key_of(-m.vertices[i]));
    if (it == vmap.end()) throw Error(Errc::BadArgument, "mesh lost central symmetry");
    m.vertex_antipode[i] = it->second;
  }

  std::map<std::array<int, 3>, int> fmap;
  auto sorted_tri = [](std::array<int, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  for (std::size_t f = 0; f < m.faces.size(); ++f) fmap.emplace(sorted_tri(m.faces[f]), f);
  m.face_antipode.assign(m.faces.size(), -1);
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    std::array<int, 3> t = {m.vertex_antipode[m.faces[f][0]], m.vertex_antipode[m.faces[f][1]],
                            m.vertex_antipode[m.faces[f][2]]};
    auto it = fmap.find(sorted_tri(t));
    if (it == fmap.end()) throw Error(Errc::BadArgument, "mesh lost central symmetry (faces)");
    m.face_antipode[f] = it->second;
  }

  return m;
}

}  // namespace transversal
