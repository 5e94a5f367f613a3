#include "transversal/topology.hpp"

#include <chrono>
#include <numeric>

#include "transversal/lp.hpp"

namespace transversal {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void classify_face(const Family& f, const SphereMesh& mesh, int face, SphereClassification& out) {
  UnitVec3 v;
  v.v = mesh.face_centroid_dir(face);
  DepthResult d = f.direction_depth(v, mix_seed(static_cast<std::uint64_t>(face)));
  out.depth[face] = d.depth;
  out.label[face] = f.classify_depth(d.depth);
}

ComponentReport components_of_mask(const SphereClassification& c, const std::vector<char>& in,
                                   auto label_of) {
  const SphereMesh& m = *c.mesh;
  UnionFind uf(m.face_count());
  for (int e = 0; e < m.edge_count(); ++e) {
    auto [fa, fb] = m.edge_faces[e];
    if (fa >= 0 && fb >= 0 && in[fa] && in[fb]) uf.unite(fa, fb);
  }

  std::vector<int> comp_of(m.face_count(), -1);
  ComponentReport rep;
  for (int f = 0; f < m.face_count(); ++f) {
    if (!in[f]) continue;
    int root = uf.find(f);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<int>(rep.components.size());
      rep.components.push_back({});
      rep.components.back().label = label_of(f);
    }
    comp_of[f] = comp_of[root];
    rep.components[comp_of[root]].faces.push_back(f);
  }

  // Euler characteristic of each closed subcomplex.
  std::vector<int> vmark(m.vertex_count(), -1), emark(m.edge_count(), -1);
  for (std::size_t ci = 0; ci < rep.components.size(); ++ci) {
    Component& comp = rep.components[ci];
    long long nv = 0, ne = 0;
    for (int f : comp.faces) {
      for (int k = 0; k < 3; ++k) {
        int v = m.faces[f][k];
        if (vmark[v] != static_cast<int>(ci)) {
          vmark[v] = static_cast<int>(ci);
          ++nv;
        }
        int e = m.face_edges[f][k];
        if (emark[e] != static_cast<int>(ci)) {
          emark[e] = static_cast<int>(ci);
          ++ne;
        }
      }
    }
    comp.euler = nv - ne + static_cast<long long>(comp.faces.size());
    comp.is_disk = comp.euler == 1;
  }

  // Antipodal image of each component (well-defined when the labeling is
  // antipodally symmetric; -1 otherwise).
  for (std::size_t ci = 0; ci < rep.components.size(); ++ci) {
    Component& comp = rep.components[ci];
    int target = -2;
    for (int f : comp.faces) {
      int af = m.face_antipode[f];
      int ac = in[af] ? comp_of[af] : -1;
      if (target == -2)
        target = ac;
      else if (target != ac)
        target = -1;
      if (target == -1) break;
    }
    comp.antipode_component = target == -2 ? -1 : target;
  }
  return rep;
}

}  // namespace

double SphereClassification::ambiguous_fraction() const {
  if (label.empty()) return 0.0;
  std::size_t amb = 0;
  for (Label l : label)
    if (l == Label::Ambiguous) ++amb;
  return static_cast<double>(amb) / static_cast<double>(label.size());
}

SphereClassification classify(const Family& f, const SphereMesh& mesh) {
  SphereClassification out;
  out.mesh = &mesh;
  out.tau = f.tol().tau;
  out.label.resize(mesh.face_count());
  out.depth.resize(mesh.face_count());
  const int n = mesh.face_count();
#pragma omp parallel for schedule(dynamic, 64)
  for (int face = 0; face < n; ++face) classify_face(f, mesh, face, out);
  return out;
}

SphereClassification classify_serial(const Family& f, const SphereMesh& mesh) {
  SphereClassification out;
  out.mesh = &mesh;
  out.tau = f.tol().tau;
  out.label.resize(mesh.face_count());
  out.depth.resize(mesh.face_count());
  for (int face = 0; face < mesh.face_count(); ++face) classify_face(f, mesh, face, out);
  return out;
}

ComponentReport components(const SphereClassification& c, Label which) {
  std::vector<char> in(c.mesh->face_count(), 0);
  for (int f = 0; f < c.mesh->face_count(); ++f) in[f] = c.label[f] == which;
  return components_of_mask(c, in, [&](int f) { return c.label[f]; });
}

ComponentReport region_components(const SphereClassification& c,
                                  std::initializer_list<Label> which) {
  std::vector<char> in(c.mesh->face_count(), 0);
  for (int f = 0; f < c.mesh->face_count(); ++f)
    for (Label l : which)
      if (c.label[f] == l) in[f] = 1;
  return components_of_mask(c, in, [&](int f) { return c.label[f]; });
}

bool complement_connected(const SphereClassification& c) {
  ComponentReport rep = region_components(c, {Label::NonTransversal, Label::Ambiguous});
  return rep.components.size() == 1;
}

ContractibilityReport analyze_classification(const SphereClassification& c,
                                             double max_ambiguous_fraction,
                                             bool ambiguous_as_transversal) {
  ContractibilityReport rep;
  rep.level = c.mesh->level;
  rep.ambiguous_fraction = c.ambiguous_fraction();

  rep.transversal = ambiguous_as_transversal
                        ? region_components(c, {Label::Transversal, Label::Ambiguous})
                        : components(c, Label::Transversal);
  rep.complement = ambiguous_as_transversal
                       ? region_components(c, {Label::NonTransversal})
                       : region_components(c, {Label::NonTransversal, Label::Ambiguous});

  rep.degenerate_empty_complement = rep.complement.components.empty();
  rep.complement_connected = rep.complement.components.size() == 1;

  for (std::size_t i = 0; i < rep.transversal.components.size(); ++i)
    rep.antipodal_pairs.push_back({static_cast<int>(i), rep.transversal.components[i].antipode_component});

  // Undirected count: orbits of the antipodal pairing.
  int orbits = 0;
  for (std::size_t i = 0; i < rep.transversal.components.size(); ++i) {
    int j = rep.transversal.components[i].antipode_component;
    if (j < 0 || j >= static_cast<int>(i)) ++orbits;  // count each orbit once
  }
  rep.undirected_count = orbits;

  bool all_disks = true;
  for (const Component& comp : rep.transversal.components) all_disks &= comp.is_disk;

  if (rep.ambiguous_fraction > max_ambiguous_fraction)
    rep.verdict = Verdict::Inconclusive;
  else
    rep.verdict = (rep.complement_connected && all_disks) ? Verdict::Pass : Verdict::Fail;
  return rep;
}

ContractibilityReport contractibility_report(const Family& f, int level,
                                             double max_ambiguous_fraction,
                                             bool ambiguous_as_transversal) {
  auto t0 = std::chrono::steady_clock::now();
  SphereMesh mesh = build_mesh(level);
  SphereClassification c = classify(f, mesh);
  ContractibilityReport rep =
      analyze_classification(c, max_ambiguous_fraction, ambiguous_as_transversal);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace transversal
