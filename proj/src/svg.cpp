#include "transversal/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace transversal {

namespace {

constexpr double kRadius = 240.0;
constexpr double kPad = 20.0;
constexpr double kCy = kRadius + kPad;

double cx_of(bool north) { return north ? kRadius + kPad : 3 * kRadius + 3 * kPad; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // +0.0 collapses -0
  return buf;
}

// Orthographic projection of a unit vector into its hemisphere's disk.
std::pair<double, double> to_screen(const Vec3& p, bool north) {
  double x = north ? p.x : -p.x;
  return {cx_of(north) + kRadius * x, kCy - kRadius * p.y};
}

const char* fill_of(Label l) {
  switch (l) {
    case Label::Transversal: return "#2a9d8f";
    case Label::NonTransversal: return "#e8e8e8";
    default: return "#f4a261";
  }
}

}  // namespace

std::string render_sphere_svg(const SphereClassification* classification,
                              const GreatCircleSet* circles, const SpherePath* path) {
  std::ostringstream out;
  const double width = 4 * kRadius + 4 * kPad;
  const double height = 2 * kRadius + 2 * kPad;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (classification && classification->mesh) {
    const SphereMesh& m = *classification->mesh;
    for (int f = 0; f < m.face_count(); ++f) {
      Vec3 c = m.face_centroid_dir(f);
      bool north = c.z >= 0.0;
      out << "<polygon points=\"";
      for (int k = 0; k < 3; ++k) {
        auto [sx, sy] = to_screen(m.vertices[m.faces[f][k]], north);
        out << fmt(sx) << "," << fmt(sy) << (k < 2 ? " " : "");
      }
      out << "\" fill=\"" << fill_of(classification->label[f]) << "\" stroke=\"none\"/>\n";
    }
  }

  for (bool north : {true, false}) {
    out << "<circle cx=\"" << fmt(cx_of(north)) << "\" cy=\"" << fmt(kCy) << "\" r=\""
        << fmt(kRadius) << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
  }

  if (circles) {
    for (const GreatCircle& gc : circles->circles) {
      auto [e1, e2] = orthonormal_basis(gc.normal);
      for (bool north : {true, false}) {
        std::ostringstream pts;
        bool any = false;
        constexpr int kSamples = 256;
        for (int i = 0; i <= kSamples; ++i) {
          double t = 2.0 * M_PI * i / kSamples;
          Vec3 p = std::cos(t) * e1 + std::sin(t) * e2;
          if ((p.z >= 0.0) != north) {
            if (any) pts << ";";  // break marker, split below
            continue;
          }
          auto [sx, sy] = to_screen(p, north);
          pts << fmt(sx) << "," << fmt(sy) << " ";
          any = true;
        }
        if (!any) continue;
        std::string all = pts.str();
        std::stringstream pieces(all);
        std::string piece;
        while (std::getline(pieces, piece, ';')) {
          if (piece.find(',') == std::string::npos) continue;
          out << "<polyline points=\"" << piece << "\" fill=\"none\" stroke=\"#1d3557\""
              << " stroke-width=\"1.2\"/>\n";
        }
      }
    }
  }

  if (path) {
    for (std::size_t i = 1; i < path->samples.size(); ++i) {
      const Vec3& a = path->samples[i - 1];
      const Vec3& b = path->samples[i];
      bool north = (a.z + b.z) >= 0.0;
      auto [x1, y1] = to_screen(a, north);
      auto [x2, y2] = to_screen(b, north);
      out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
          << "\" y2=\"" << fmt(y2) << "\" stroke=\"#d62828\" stroke-width=\"2\"/>\n";
    }
    if (!path->samples.empty()) {
      const Vec3& s = path->samples.front();
      auto [sx, sy] = to_screen(s, s.z >= 0.0);
      out << "<circle cx=\"" << fmt(sx) << "\" cy=\"" << fmt(sy)
          << "\" r=\"4\" fill=\"#d62828\"/>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace transversal
