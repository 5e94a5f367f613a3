// Command-line front end: scene analysis, path construction, scene
// generators, direction-curve probing, and SVG rendering.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "transversal/error.hpp"
#include "transversal/scene_io.hpp"
#include "transversal/scenes.hpp"
#include "transversal/svg.hpp"

namespace tv = transversal;

namespace {

void apply_thread_cap() {
#ifdef _OPENMP
  if (const char* env = std::getenv("TRANSVERSAL_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
  }
#endif
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tv::Error(tv::Errc::BadArgument, "cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& output, const std::string& content) {
  if (output.empty() || output == "-")
    std::cout << content;
  else
    write_file(output, content);
}

int run(int argc, char** argv) {
  CLI::App app{"cone-of-directions analysis for families of disjoint convex bodies"};
  app.require_subcommand(1);

  // analyze ------------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "classify directions and report components");
  std::string an_scene, an_output, an_svg;
  int an_level = 4;
  std::optional<double> an_tau;
  bool an_undirected = false, an_directed = false, an_amb_as_t = false;
  double an_max_amb = 0.02;
  analyze->add_option("scene", an_scene, "scene JSON file")->required();
  analyze->add_option("--level", an_level, "mesh subdivision level (default 4)");
  analyze->add_option("--tolerance", an_tau, "absolute tau override");
  analyze->add_option("--output", an_output, "report path (default stdout)");
  analyze->add_option("--svg", an_svg, "also render the classification to this file");
  analyze->add_option("--max-ambiguous", an_max_amb, "ambiguous fraction for INCONCLUSIVE");
  analyze->add_flag("--undirected", an_undirected, "report undirected counts as primary");
  analyze->add_flag("--directed", an_directed, "report directed counts as primary (default)");
  analyze->add_flag("--ambiguous-as-transversal", an_amb_as_t,
                    "count boundary-ambiguous faces toward the transversal region");

  // path ---------------------------------------------------------------
  auto* pathc = app.add_subcommand("path", "build a non-transversal path into the circles");
  std::string pa_scene, pa_from, pa_output, pa_svg;
  std::optional<double> pa_tau;
  pathc->add_option("scene", pa_scene, "scene JSON file")->required();
  pathc->add_option("--from", pa_from, "start direction 'x,y,z'")->required();
  pathc->add_option("--tolerance", pa_tau, "absolute tau override");
  pathc->add_option("--output", pa_output, "path JSON (default stdout)");
  pathc->add_option("--svg", pa_svg, "render the path over the circles to this file");

  // construct ----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "generate a scene file");
  auto* cantor = construct->add_subcommand("cantor", "ruled-surface family with prescribed curve");
  int ca_stage = 0, ca_samples = 8;
  std::string ca_output;
  cantor->add_option("--stage", ca_stage, "middle-thirds stage (>= 0)")->required();
  cantor->add_option("--samples", ca_samples, "samples per interval (>= 2)");
  cantor->add_option("--output", ca_output, "scene path (default stdout)");
  auto* random = construct->add_subcommand("random", "random disjoint polytope family");
  int ra_n = 3;
  std::uint64_t ra_seed = 1;
  std::string ra_output;
  random->add_option("--n", ra_n, "number of bodies (2..12)")->required();
  random->add_option("--seed", ra_seed, "placement seed");
  random->add_option("--output", ra_output, "scene path (default stdout)");
  construct->require_subcommand(1);

  // probe-curve ----------------------------------------------------------
  auto* probe = app.add_subcommand("probe-curve", "depth along directions (1,0,b)");
  std::string pr_scene, pr_output;
  double pr_bmin = 0.5, pr_bmax = 2.5;
  int pr_count = 801;
  std::optional<double> pr_tau_curve, pr_gap;
  probe->add_option("scene", pr_scene, "scene JSON file")->required();
  probe->add_option("--bmin", pr_bmin, "grid start (default 0.5)");
  probe->add_option("--bmax", pr_bmax, "grid end (default 2.5)");
  probe->add_option("--count", pr_count, "grid size (default 801)");
  probe->add_option("--tau-curve", pr_tau_curve, "near-miss tolerance (default from scene)");
  probe->add_option("--gap-threshold", pr_gap, "cluster split threshold (default 0.05)");
  probe->add_option("--output", pr_output, "probe JSON (default stdout)");

  // render ---------------------------------------------------------------
  auto* render = app.add_subcommand("render", "classification SVG for a scene");
  std::string re_scene, re_output;
  int re_level = 4;
  render->add_option("scene", re_scene, "scene JSON file")->required();
  render->add_option("--level", re_level, "mesh subdivision level (default 4)");
  render->add_option("--output", re_output, "SVG path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  apply_thread_cap();

  if (*analyze) {
    tv::Family fam = tv::to_family(tv::load_scene(an_scene), an_tau);
    tv::ContractibilityReport rep =
        tv::contractibility_report(fam, an_level, an_max_amb, an_amb_as_t);
    tv::GreatCircleSet y = fam.separating_circles();
    emit(an_output, tv::report_to_json(rep, y, fam.tol(), an_undirected && !an_directed));
    if (!an_svg.empty()) {
      tv::SphereMesh mesh = tv::build_mesh(an_level);
      tv::SphereClassification c = tv::classify(fam, mesh);
      write_file(an_svg, tv::render_sphere_svg(&c, &y, nullptr));
    }
    if (rep.verdict == tv::Verdict::Pass) return 0;
    return rep.verdict == tv::Verdict::Fail ? 2 : 3;
  }

  if (*pathc) {
    tv::Family fam = tv::to_family(tv::load_scene(pa_scene), pa_tau);
    double x, y0, z;
    if (std::sscanf(pa_from.c_str(), "%lf,%lf,%lf", &x, &y0, &z) != 3)
      throw tv::Error(tv::Errc::BadArgument, "--from expects 'x,y,z'");
    tv::UnitVec3 start(tv::Vec3{x, y0, z});
    tv::GreatCircleSet y = fam.separating_circles();
    tv::SpherePath path = tv::connect_to_separators(fam, start, y);
    emit(pa_output, tv::path_to_json(path, y));
    if (!pa_svg.empty()) write_file(pa_svg, tv::render_sphere_svg(nullptr, &y, &path));
    return 0;
  }

  if (*cantor) {
    if (ca_stage < 0 || ca_samples < 2)
      throw tv::Error(tv::Errc::BadArgument, "stage must be >= 0 and samples >= 2");
    tv::Family fam = tv::cantor_family(tv::CantorSpec::make(ca_stage, ca_samples));
    emit(ca_output, tv::serialize_scene(tv::scene_from_family(fam)));
    return 0;
  }
  if (*random) {
    tv::Family fam = tv::random_disjoint_family(ra_n, ra_seed);
    emit(ra_output, tv::serialize_scene(tv::scene_from_family(fam)));
    return 0;
  }

  if (*probe) {
    tv::Family fam = tv::to_family(tv::load_scene(pr_scene));
    if (pr_count < 2 || pr_bmax <= pr_bmin)
      throw tv::Error(tv::Errc::BadArgument, "bad probe grid");
    std::vector<double> grid(pr_count);
    for (int i = 0; i < pr_count; ++i)
      grid[i] = pr_bmin + (pr_bmax - pr_bmin) * i / (pr_count - 1);
    auto probe_vals = tv::probe_direction_curve(fam, grid);
    double tau_curve = pr_tau_curve.value_or(fam.tol().tau_curve);
    double gap = pr_gap.value_or(0.05);
    int clusters = tv::cluster_count(probe_vals, tau_curve, gap);
    std::string json = "{\n  \"version\": 1,\n  \"tau_curve\": " + std::to_string(tau_curve) +
                       ",\n  \"gap_threshold\": " + std::to_string(gap) +
                       ",\n  \"clusters\": " + std::to_string(clusters) + ",\n  \"probes\": [\n";
    for (std::size_t i = 0; i < probe_vals.size(); ++i) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "    [%.17g, %.17g]%s\n", probe_vals[i].first,
                    probe_vals[i].second, i + 1 < probe_vals.size() ? "," : "");
      json += buf;
    }
    json += "  ]\n}\n";
    emit(pr_output, json);
    return 0;
  }

  if (*render) {
    tv::Family fam = tv::to_family(tv::load_scene(re_scene));
    tv::SphereMesh mesh = tv::build_mesh(re_level);
    tv::SphereClassification c = tv::classify(fam, mesh);
    tv::GreatCircleSet y = fam.separating_circles();
    emit(re_output, tv::render_sphere_svg(&c, &y, nullptr));
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
