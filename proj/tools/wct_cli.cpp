// Command-line front end. Exit codes: 0 success (for `check`: completely
// well-centered), 1 `check` found a tet that is not, 2 usage error, 3 input
// that cannot be read or parsed, 4 degenerate geometry.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "wct/cube.hpp"
#include "wct/delaunay.hpp"
#include "wct/error.hpp"
#include "wct/io.hpp"
#include "wct/optimizer.hpp"
#include "wct/report.hpp"
#include "wct/subdivision.hpp"
#include "wct/tilings.hpp"

namespace {

using namespace wct;

enum Exit { kOk = 0, kNotWellCentered = 1, kUsage = 2, kParse = 3, kDegenerate = 4 };

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
      return kUsage;
    case ErrorCode::ParseError:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::IoError:
      return kParse;
    case ErrorCode::DegenerateSimplex:
    case ErrorCode::DegenerateTet:
    case ErrorCode::DuplicateTet:
    case ErrorCode::DuplicatePoint:
    case ErrorCode::NotConforming:
    case ErrorCode::AllCoplanar:
    case ErrorCode::TooFewPoints:
      return kDegenerate;
  }
  return kDegenerate;
}

struct GenerateArgs {
  std::string kind;
  double a = 0.0, b = 0.0;  // 0 means the body-centered value sqrt(2)/2
  int layers = 1;
  int p = 2, q = 3;
  std::string scheme = "uniform";
  double t = -1.0;  // negative: best value of the slide scan
  bool optimize = false;
  std::uint64_t seed = 1;
  std::string out, format;
};

struct OptimizeArgs {
  std::string in, free = "interior", objective = "cwc", out, format;
  int max_iters = 500;
  double tol = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 1;
};

MeshFormat format_for(const std::string& out, const std::string& format) {
  if (format == "vtk") return MeshFormat::Vtk;
  if (format == "nodeele") return MeshFormat::NodeEle;
  return std::filesystem::path(out).extension() == ".vtk" ? MeshFormat::Vtk : MeshFormat::NodeEle;
}

TetMesh single_tet(const Tetra& t) {
  return TetMesh::build({t.p.begin(), t.p.end()}, {{0, 1, 2, 3}});
}

TetMesh generate(const GenerateArgs& g, std::ostream& log) {
  const double half_root2 = std::sqrt(2.0) / 2;
  const LatticeParams params{g.a > 0 ? g.a : half_root2, g.b > 0 ? g.b : half_root2};
  if (g.kind == "sommerville") return single_tet(sommerville_tet());
  if (g.kind == "lattice") return space_tiling(params, {{0, 4}, {0, 4}, {0, 3}});
  if (g.kind == "slab") return slab_tiling(params, g.layers);
  if (g.kind == "prism") return prism_tiling({g.p, g.q, 1.0});
  OptimizeSpec spec;
  spec.seed = g.seed;
  if (g.kind == "subdiv8") {
    SlideScheme s;
    s.variant = g.scheme == "a" ? SlideVariant::SchemeA
                : g.scheme == "b" ? SlideVariant::SchemeB
                                  : SlideVariant::Uniform;
    if (s.variant != SlideVariant::Uniform) {
      s.t = g.t >= 0 ? g.t : scan_slide(regular_tet(), s.variant).best.t;
      log << "slide t = " << s.t << '\n';
    }
    TetMesh m = midpoint_subdivide(regular_tet(), s);
    if (!g.optimize) return m;
    spec.free_vertices = midpoint_slide_vertices(m);
    return optimize(m, spec).mesh;
  }
  if (g.kind == "subdiv49") {
    Subdivision49 s = subdivide_49();
    if (!g.optimize) return s.mesh;
    spec.free_vertices = s.free_vertices;
    return optimize(s.mesh, spec).mesh;
  }
  CubePipelineOptions opts;
  opts.optimize = spec;
  CubePipelineResult r = cube_pipeline(default_interior_seeds(), opts);
  log << "cube: " << r.tet_count << " tets, completely well-centered: "
      << (r.achieved_complete_wc ? "yes" : "no") << '\n';
  return std::move(r.mesh);
}

std::vector<FreeVertex> parse_free(const std::string& spec, const TetMesh& m) {
  if (spec == "interior") return interior_free_vertices(m);
  std::vector<FreeVertex> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::InvalidArgument, "--free expects 'interior' or a comma-separated id list");
    }
    out.push_back({static_cast<VertexId>(v), Motion::Free, {}});
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Well-centered tetrahedral mesh toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Build a mesh");
  g->add_option("kind", gen.kind, "Mesh family")
      ->required()
      ->check(CLI::IsMember({"sommerville", "lattice", "slab", "prism", "subdiv8", "subdiv49", "cube"}));
  g->add_option("--a", gen.a, "Lattice row offset (default sqrt(2)/2)")->check(CLI::PositiveNumber);
  g->add_option("--b", gen.b, "Lattice layer height (default sqrt(2)/2)")->check(CLI::PositiveNumber);
  g->add_option("--layers", gen.layers, "Slab layers")->check(CLI::PositiveNumber);
  g->add_option("--p", gen.p, "Prism strips")->check(CLI::PositiveNumber);
  g->add_option("--q", gen.q, "Prism layers")->check(CLI::PositiveNumber);
  g->add_option("--scheme", gen.scheme, "Midpoint slide scheme")->check(CLI::IsMember({"uniform", "a", "b"}));
  g->add_option("--t", gen.t, "Slide fraction (default: best of a scan)");
  g->add_flag("--optimize", gen.optimize, "Optimize subdivision vertices on their edges and faces");
  g->add_option("--seed", gen.seed, "Optimizer seed");
  g->add_option("--out", gen.out, "Output path")->required();
  g->add_option("--format", gen.format, "Output format (default by extension)")
      ->check(CLI::IsMember({"nodeele", "vtk"}));

  std::string check_path;
  bool check_json = false;
  auto* c = app.add_subcommand("check", "Classify a mesh; exit 0 iff completely well-centered");
  c->add_option("path", check_path, "Mesh file")->required();
  c->add_flag("--json", check_json, "JSON output");

  OptimizeArgs opt;
  auto* o = app.add_subcommand("optimize", "Move vertices toward well-centeredness");
  o->add_option("path", opt.in, "Mesh file")->required();
  o->add_option("--free", opt.free, "'interior' or comma-separated vertex ids");
  o->add_option("--objective", opt.objective, "Objective")->check(CLI::IsMember({"minhr", "cwc"}));
  o->add_option("--max-iters", opt.max_iters, "Sweep budget")->check(CLI::PositiveNumber);
  o->add_option("--tol", opt.tol, "Stop once the objective reaches this value");
  o->add_option("--seed", opt.seed, "Seed for fallback directions");
  o->add_option("--out", opt.out, "Output path")->required();
  o->add_option("--format", opt.format, "Output format (default by extension)")
      ->check(CLI::IsMember({"nodeele", "vtk"}));

  std::string points_path, dt_out, dt_format;
  auto* d = app.add_subcommand("delaunay", "Delaunay tetrahedralization of a .node point file");
  d->add_option("points", points_path, "Point file")->required();
  d->add_option("--out", dt_out, "Output path")->required();
  d->add_option("--format", dt_format, "Output format (default by extension)")
      ->check(CLI::IsMember({"nodeele", "vtk"}));

  std::string report_path, report_format = "table";
  auto* r = app.add_subcommand("report", "Print quality statistics");
  r->add_option("path", report_path, "Mesh file")->required();
  r->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (g->parsed()) {
    const TetMesh m = generate(gen, std::cerr);
    write_mesh(m, gen.out, format_for(gen.out, gen.format));
    return kOk;
  }
  if (c->parsed()) {
    const TetMesh m = read_mesh(check_path);
    const QualityReport q = mesh_quality(m);
    std::cout << (check_json ? format_json(m, q) : format_table(q));
    return q.completely_wc ? kOk : kNotWellCentered;
  }
  if (o->parsed()) {
    const TetMesh m = read_mesh(opt.in);
    OptimizeSpec spec;
    spec.free_vertices = parse_free(opt.free, m);
    spec.objective = opt.objective == "minhr" ? Objective::MinHR : Objective::CompleteWC;
    spec.max_iters = opt.max_iters;
    spec.tol = opt.tol;
    spec.seed = opt.seed;
    const OptimizeResult res = optimize(m, spec);
    write_mesh(res.mesh, opt.out, format_for(opt.out, opt.format));
    const auto& first = res.trace.sweeps.front();
    const auto& last = res.trace.sweeps.back();
    std::printf("sweeps %zu, %s\nobjective %.6f -> %.6f\nmin h/R %.6f -> %.6f\nmax face angle %.4f -> %.4f\n",
                res.trace.sweeps.size() - 1, to_string(res.trace.termination), first.objective,
                last.objective, first.min_h_over_r, last.min_h_over_r, first.max_face_angle_deg,
                last.max_face_angle_deg);
    return kOk;
  }
  if (d->parsed()) {
    const TetMesh m = delaunay3d(read_points(points_path));
    write_mesh(m, dt_out, format_for(dt_out, dt_format));
    std::printf("%zu tets\n", m.num_tets());
    return kOk;
  }
  const TetMesh m = read_mesh(report_path);
  const QualityReport q = mesh_quality(m);
  std::cout << (report_format == "json" ? format_json(m, q) : format_table(q));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wct::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
}
