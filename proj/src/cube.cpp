#include "wct/cube.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wct/delaunay.hpp"
#include "wct/error.hpp"

namespace wct {

namespace {

// Marked corners are those with an even coordinate sum.
bool is_marked(int x, int y, int z) { return (x + y + z) % 2 == 0; }

std::vector<TetVerts> sorted_tets(const TetMesh& m) {
  std::vector<TetVerts> out = m.tets();
  for (TetVerts& t : out) std::sort(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Point3> cube_marked_corners() {
  return {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
}

std::vector<Point3> cube_surface_points() {
  std::vector<Point3> pts;
  for (int x = 0; x <= 2; ++x) {
    for (int y = 0; y <= 2; ++y) {
      for (int z = 0; z <= 2; ++z) {
        const int mids = (x == 1) + (y == 1) + (z == 1);
        if (mids <= 1) pts.push_back({x / 2.0, y / 2.0, z / 2.0});
      }
    }
  }
  // Face diagonals: in the face's two free coordinates (u, v), the marked
  // diagonal runs from the marked corner at the origin or at (1, 0).
  for (int axis = 0; axis < 3; ++axis) {
    for (int side = 0; side <= 1; ++side) {
      const int ua = (axis + 1) % 3, va = (axis + 2) % 3;
      auto put = [&](double u, double v) {
        Point3 p{};
        p[axis] = side;
        p[ua] = u;
        p[va] = v;
        pts.push_back(p);
      };
      int c0[3] = {0, 0, 0};
      c0[axis] = side;
      const bool main_marked = is_marked(c0[0], c0[1], c0[2]);
      // Each low value is 1 - high, computed exactly, so the anti-diagonal
      // points are exactly collinear with the face corners.
      for (double hi : {0.65, 0.705}) {
        const double lo = 1.0 - hi;
        const bool on_main = (hi == 0.65) == main_marked;
        if (on_main) {
          put(lo, lo);
          put(hi, hi);
        } else {
          put(lo, hi);
          put(hi, lo);
        }
      }
    }
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

std::vector<Point3> default_interior_seeds() {
  std::vector<Point3> seeds{{0.5, 0.5, 0.5}};
  for (const Point3& c : cube_marked_corners()) {
    Vec3 in{};  // unit inward step along each axis from this corner
    for (int a = 0; a < 3; ++a) in[a] = c[a] == 0 ? 1.0 : -1.0;
    for (int a = 0; a < 3; ++a) {
      Point3 s = c + 0.2 * in;
      s[a] += 0.1 * in[a];
      seeds.push_back(s);
    }
  }
  return seeds;
}

CubePipelineResult cube_pipeline(const std::vector<Point3>& interior_seeds,
                                 const CubePipelineOptions& options) {
  if (options.rounds < 1) throw Error(ErrorCode::InvalidArgument, "pipeline needs one round");
  if (!(options.scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  for (std::size_t i = 0; i < interior_seeds.size(); ++i) {
    const Point3& s = interior_seeds[i];
    for (int a = 0; a < 3; ++a) {
      if (!(s[a] > 0.0 && s[a] < 1.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "seed " + std::to_string(i) + " is not strictly inside the cube");
      }
    }
  }

  std::vector<Point3> pts = cube_surface_points();
  const std::size_t n_surface = pts.size();
  pts.insert(pts.end(), interior_seeds.begin(), interior_seeds.end());
  for (Point3& p : pts) p *= options.scale;

  OptimizeSpec spec = options.optimize;
  spec.free_vertices.clear();
  for (std::size_t v = n_surface; v < pts.size(); ++v) {
    spec.free_vertices.push_back({static_cast<VertexId>(v), Motion::Free, {}});
  }

  CubePipelineResult result;
  TetMesh mesh = delaunay3d(pts);
  for (int round = 0; round < options.rounds; ++round) {
    result.rounds_run = round + 1;
    if (spec.free_vertices.empty()) break;
    const OptimizeResult opt = optimize(mesh, spec);
    TetMesh next = delaunay3d(opt.mesh.vertices());
    const bool stable = sorted_tets(next) == sorted_tets(opt.mesh);
    mesh = std::move(next);
    if (stable) break;
  }
  result.report = mesh_quality(mesh);
  result.achieved_complete_wc = result.report.completely_wc;
  result.tet_count = mesh.num_tets();
  result.mesh = std::move(mesh);
  return result;
}

}  // namespace wct
