#pragma once

#include <string>

#include "transversal/paths.hpp"
#include "transversal/topology.hpp"

namespace transversal {

// Two-hemisphere orthographic rendering: the +z hemisphere on the left disk,
// the -z hemisphere (viewed from -z) on the right. Faces are filled by label,
// separating circles drawn as polylines, a path as individual line segments.
// All inputs optional; output is byte-stable for fixed input.
std::string render_sphere_svg(const SphereClassification* classification,
                              const GreatCircleSet* circles, const SpherePath* path);

}  // namespace transversal
