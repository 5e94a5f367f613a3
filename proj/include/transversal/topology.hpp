#pragma once

#include <vector>

#include "transversal/family.hpp"
#include "transversal/sphere_mesh.hpp"

namespace transversal {

// Per-face labeling of a sphere mesh by transversality of the face-centroid
// direction, with the signed depth values retained.
struct SphereClassification {
  const SphereMesh* mesh = nullptr;
  std::vector<Label> label;
  std::vector<double> depth;
  double tau = 0.0;

  double ambiguous_fraction() const;
};

// Depth of every face centroid. The parallel version distributes faces over
// OpenMP threads; per-face work is pure with a seed derived from the face
// index, so the result is bitwise independent of the schedule. The serial
// version is the reference implementation used for testing and benchmarks.
SphereClassification classify(const Family& f, const SphereMesh& mesh);
SphereClassification classify_serial(const Family& f, const SphereMesh& mesh);

struct Component {
  std::vector<int> faces;
  Label label = Label::NonTransversal;
  long long euler = 0;           // V - E + F of the closed subcomplex
  bool is_disk = false;          // connected with euler == 1
  int antipode_component = -1;   // index within the same report, -1 if mixed
};

struct ComponentReport {
  std::vector<Component> components;
};

// Face-adjacency components of the faces carrying exactly `which`.
ComponentReport components(const SphereClassification& c, Label which);

// Components of the region formed by all faces whose label is in `which`.
ComponentReport region_components(const SphereClassification& c, std::initializer_list<Label> which);

// True iff the non-transversal and ambiguous faces form exactly one
// component. False (degenerate) when that region is empty.
bool complement_connected(const SphereClassification& c);

enum class Verdict { Pass, Fail, Inconclusive };

struct ContractibilityReport {
  int level = 0;
  Verdict verdict = Verdict::Fail;
  double ambiguous_fraction = 0.0;
  bool complement_connected = false;
  bool degenerate_empty_complement = false;
  ComponentReport transversal;     // directed components of the direction set
  ComponentReport complement;      // non-transversal region components
  std::vector<std::pair<int, int>> antipodal_pairs;  // component index pairs
  int undirected_count = 0;
  double wall_seconds = 0.0;
};

// Full pipeline: classify at the given level, analyze components, verdict.
// Pass requires a connected complement and every transversal component a
// disk; verdict is Inconclusive when the ambiguous fraction exceeds
// max_ambiguous_fraction. With ambiguous_as_transversal, ambiguous faces
// count toward the transversal region in the component analysis.
ContractibilityReport contractibility_report(const Family& f, int level,
                                             double max_ambiguous_fraction = 0.02,
                                             bool ambiguous_as_transversal = false);

ContractibilityReport analyze_classification(const SphereClassification& c,
                                             double max_ambiguous_fraction = 0.02,
                                             bool ambiguous_as_transversal = false);

}  // namespace transversal
