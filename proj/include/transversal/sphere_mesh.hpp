#pragma once

#include <array>
#include <vector>

#include "transversal/vec.hpp"

namespace transversal {

// Subdivided icosahedral triangulation of the unit sphere. Centrally
// symmetric at every level: the antipodal map is a bijection on vertices and
// faces (negation is exact in floating point, so the tables are built by
// bit-exact lookup).
struct SphereMesh {
  int level = 0;
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
  std::vector<std::array<int, 2>> edge_verts;
  std::vector<std::array<int, 2>> edge_faces;   // -1 when absent (never, on S2)
  std::vector<std::array<int, 3>> face_edges;
  std::vector<std::array<int, 3>> face_neighbors;
  std::vector<int> vertex_antipode;
  std::vector<int> face_antipode;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edge_verts.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }

  Vec3 face_centroid_dir(int f) const {
    const auto& t = faces[f];
    return (vertices[t[0]] + vertices[t[1]] + vertices[t[2]]).normalized();
  }
};

// Icosahedron subdivided `level` times (0 <= level <= 9), midpoints projected
// to the sphere.
SphereMesh build_mesh(int level);

}  // namespace transversal
