#include "transversal/scene_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "transversal/error.hpp"

namespace transversal {

using nlohmann::json;

namespace {

json vec_to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(Errc::BadScene, "expected a 3-element array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

const char* case_name(PathCase c) {
  switch (c) {
    case PathCase::Constant: return "CONSTANT";
    case PathCase::TwoBody: return "TWO_BODY";
    case PathCase::ThreeBody: return "THREE_BODY";
    default: return "GEODESIC_MARCH";
  }
}

}  // namespace

SceneFile parse_scene(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::BadScene, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("version") || !j.contains("bodies"))
    throw Error(Errc::BadScene, "scene needs 'version' and 'bodies'");
  SceneFile s;
  s.version = j["version"].get<int>();
  if (s.version != 1) throw Error(Errc::BadScene, "unsupported scene version");

  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (t.contains("tau")) s.tolerances.tau = t["tau"].get<double>();
    if (t.contains("tau_sep")) s.tolerances.tau_sep = t["tau_sep"].get<double>();
    if (t.contains("tau_line")) s.tolerances.tau_line = t["tau_line"].get<double>();
    if (t.contains("tau_curve")) s.tolerances.tau_curve = t["tau_curve"].get<double>();
  }

  for (const json& bj : j["bodies"]) {
    SceneBody b;
    b.label = bj.value("label", "");
    std::string kind = bj.value("kind", "polytope");
    if (kind == "polytope") {
      b.kind = SceneBody::Kind::Polytope;
      if (!bj.contains("vertices") || bj["vertices"].empty())
        throw Error(Errc::BadScene, "polytope body needs vertices");
      for (const json& vj : bj["vertices"]) b.vertices.push_back(vec_from_json(vj));
    } else if (kind == "ball") {
      b.kind = SceneBody::Kind::Ball;
      if (!bj.contains("center") || !bj.contains("radius"))
        throw Error(Errc::BadScene, "ball body needs center and radius");
      b.center = vec_from_json(bj["center"]);
      b.radius = bj["radius"].get<double>();
      b.facets = bj.value("facets", 80);
    } else {
      throw Error(Errc::BadScene, "unknown body kind '" + kind + "'");
    }
    s.bodies.push_back(std::move(b));
  }
  return s;
}

SceneFile load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadScene, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

std::string serialize_scene(const SceneFile& s) {
  json j;
  j["version"] = s.version;
  json bodies = json::array();
  for (const SceneBody& b : s.bodies) {
    json bj;
    bj["label"] = b.label;
    if (b.kind == SceneBody::Kind::Polytope) {
      bj["kind"] = "polytope";
      json verts = json::array();
      for (const Vec3& v : b.vertices) verts.push_back(vec_to_json(v));
      bj["vertices"] = std::move(verts);
    } else {
      bj["kind"] = "ball";
      bj["center"] = vec_to_json(b.center);
      bj["radius"] = b.radius;
      bj["facets"] = b.facets;
    }
    bodies.push_back(std::move(bj));
  }
  j["bodies"] = std::move(bodies);
  if (s.tolerances.tau || s.tolerances.tau_sep || s.tolerances.tau_line || s.tolerances.tau_curve) {
    json t;
    if (s.tolerances.tau) t["tau"] = *s.tolerances.tau;
    if (s.tolerances.tau_sep) t["tau_sep"] = *s.tolerances.tau_sep;
    if (s.tolerances.tau_line) t["tau_line"] = *s.tolerances.tau_line;
    if (s.tolerances.tau_curve) t["tau_curve"] = *s.tolerances.tau_curve;
    j["tolerances"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

Family to_family(const SceneFile& s, std::optional<double> tau_override) {
  std::vector<ConvexBody> bodies;
  bodies.reserve(s.bodies.size());
  for (const SceneBody& b : s.bodies) {
    if (b.kind == SceneBody::Kind::Polytope) {
      ConvexBody cb;
      cb.label = b.label;
      cb.vertices = b.vertices;
      bodies.push_back(std::move(cb));
    } else {
      bodies.push_back(make_ball(b.center, b.radius, b.facets, b.label));
    }
  }
  ToleranceOverrides ov = s.tolerances;
  if (tau_override) ov.tau = *tau_override;
  return Family(std::move(bodies), ov);
}

SceneFile scene_from_bodies(const std::vector<ConvexBody>& bodies) {
  SceneFile s;
  for (const ConvexBody& b : bodies) {
    SceneBody sb;
    sb.kind = SceneBody::Kind::Polytope;
    sb.label = b.label;
    sb.vertices = b.vertices;
    s.bodies.push_back(std::move(sb));
  }
  return s;
}

SceneFile scene_from_family(const Family& f) { return scene_from_bodies(f.bodies()); }

std::string report_to_json(const ContractibilityReport& rep, const GreatCircleSet& y,
                           const Tolerances& tol, bool undirected_primary) {
  json j;
  j["version"] = 1;
  j["mesh_level"] = rep.level;
  j["verdict"] = verdict_name(rep.verdict);
  j["mode"] = undirected_primary ? "undirected" : "directed";
  j["ambiguous_fraction"] = rep.ambiguous_fraction;
  j["complement_connected"] = rep.complement_connected;
  j["degenerate_empty_complement"] = rep.degenerate_empty_complement;
  j["wall_time_seconds"] = rep.wall_seconds;

  json tolj;
  tolj["tau"] = tol.tau;
  tolj["tau_sep"] = tol.tau_sep;
  tolj["tau_line"] = tol.tau_line;
  tolj["tau_curve"] = tol.tau_curve;
  j["tolerances"] = std::move(tolj);

  auto comps_to_json = [](const ComponentReport& cr) {
    json arr = json::array();
    for (const Component& c : cr.components) {
      json cj;
      cj["faces"] = c.faces.size();
      cj["euler_characteristic"] = c.euler;
      cj["is_disk"] = c.is_disk;
      cj["antipode_component"] = c.antipode_component;
      arr.push_back(std::move(cj));
    }
    return arr;
  };

  json dir;
  dir["component_count"] = rep.transversal.components.size();
  dir["components"] = comps_to_json(rep.transversal);
  j["directed"] = std::move(dir);
  j["undirected_component_count"] = rep.undirected_count;

  json comp;
  comp["component_count"] = rep.complement.components.size();
  comp["components"] = comps_to_json(rep.complement);
  j["complement"] = std::move(comp);

  json pairs = json::array();
  for (auto [a, b] : rep.antipodal_pairs) pairs.push_back(json::array({a, b}));
  j["antipodal_pairs"] = std::move(pairs);

  json circles = json::array();
  for (const GreatCircle& c : y.circles) {
    json cj;
    cj["pair"] = json::array({c.pair.first, c.pair.second});
    cj["normal"] = vec_to_json(c.normal.v);
    circles.push_back(std::move(cj));
  }
  j["separating_circles"] = std::move(circles);
  return j.dump(2) + "\n";
}

std::string path_to_json(const SpherePath& path, const GreatCircleSet& y) {
  json j;
  j["version"] = 1;
  j["case"] = case_name(path.case_tag);
  j["stop_angle"] = path.stop_angle;
  j["sample_count"] = path.samples.size();
  json samples = json::array();
  for (const Vec3& s : path.samples) samples.push_back(vec_to_json(s));
  j["samples"] = std::move(samples);
  if (path.witness) {
    json wj;
    wj["indices"] = path.witness->indices;
    wj["depth"] = path.witness->depth_at_v;
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  if (path.end_circle >= 0 && path.end_circle < static_cast<int>(y.circles.size())) {
    const GreatCircle& c = y.circles[path.end_circle];
    json cj;
    cj["pair"] = json::array({c.pair.first, c.pair.second});
    cj["normal"] = vec_to_json(c.normal.v);
    j["end_circle"] = std::move(cj);
  } else {
    j["end_circle"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace transversal
