#pragma once

#include <optional>
#include <string>
#include <vector>

#include "transversal/family.hpp"
#include "transversal/paths.hpp"
#include "transversal/topology.hpp"

namespace transversal {

// On-disk scene description. Balls stay balls in the file (center, radius,
// facet count) and are discretized only when a Family is built, so scenes
// round-trip losslessly.
struct SceneBody {
  enum class Kind { Polytope, Ball };
  std::string label;
  Kind kind = Kind::Polytope;
  std::vector<Vec3> vertices;  // polytope
  Vec3 center;                 // ball
  double radius = 0.0;
  int facets = 80;
};

struct SceneFile {
  int version = 1;
  std::vector<SceneBody> bodies;
  ToleranceOverrides tolerances;
};

SceneFile parse_scene(const std::string& json_text);
SceneFile load_scene(const std::string& path);
std::string serialize_scene(const SceneFile& s);

Family to_family(const SceneFile& s, std::optional<double> tau_override = std::nullopt);

SceneFile scene_from_family(const Family& f);
SceneFile scene_from_bodies(const std::vector<ConvexBody>& bodies);

// JSON documents for reports and paths (schema in docs/report-schema.json).
std::string report_to_json(const ContractibilityReport& rep, const GreatCircleSet& y,
                           const Tolerances& tol, bool undirected_primary);
std::string path_to_json(const SpherePath& path, const GreatCircleSet& y);

}  // namespace transversal
