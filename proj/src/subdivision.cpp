#include "wct/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wct/error.hpp"

namespace wct {

namespace {

// Index of the edge point on edge (i, j) in the 10-vertex midpoint layout.
VertexId edge_point(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int e = 0; e < 6; ++e) {
    if (kTetEdges[e][0] == i && kTetEdges[e][1] == j) return static_cast<VertexId>(4 + e);
  }
  return 0;
}

// Endpoint each sliding edge point moves toward, indexed by edge.
// Edges (0,1) and (2,3) carry the fixed diagonal and are marked -1.
constexpr std::array<int, 6> kSchemeATarget{-1, 0, 0, 1, 1, -1};
constexpr std::array<int, 6> kSchemeBTarget{-1, 2, 0, 1, 3, -1};

}  // namespace

Tetra regular_tet() {
  return Tetra{{Point3{1, 1, 1}, Point3{1, -1, -1}, Point3{-1, 1, -1}, Point3{-1, -1, 1}}};
}

TetMesh midpoint_subdivide(const Tetra& parent, const SlideScheme& scheme) {
  if (!(scheme.t >= 0.0 && scheme.t < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "slide parameter must lie in [0, 1/2)");
  }
  if (scheme.variant == SlideVariant::Uniform && scheme.t != 0.0) {
    throw Error(ErrorCode::InvalidArgument, "the uniform scheme does not slide");
  }
  (void)circumsphere_tet(parent);  // rejects flat parents

  std::vector<Point3> pts(parent.p.begin(), parent.p.end());
  for (int e = 0; e < 6; ++e) {
    const auto [i, j] = kTetEdges[e];
    Point3 m = 0.5 * (parent[i] + parent[j]);
    int target = -1;
    if (scheme.variant == SlideVariant::SchemeA) target = kSchemeATarget[e];
    if (scheme.variant == SlideVariant::SchemeB) target = kSchemeBTarget[e];
    if (target >= 0) {
      const int other = target == i ? j : i;
      m += scheme.t * (parent[target] - parent[other]);
    }
    pts.push_back(m);
  }

  std::vector<TetVerts> tets;
  for (int c = 0; c < 4; ++c) {
    TetVerts t{static_cast<VertexId>(c), 0, 0, 0};
    int k = 1;
    for (int o = 0; o < 4; ++o) {
      if (o != c) t[k++] = edge_point(c, o);
    }
    tets.push_back(t);
  }
  const VertexId d0 = edge_point(0, 1), d1 = edge_point(2, 3);
  const std::array<VertexId, 4> ring{edge_point(0, 2), edge_point(0, 3), edge_point(1, 3),
                                     edge_point(1, 2)};
  for (int r = 0; r < 4; ++r) tets.push_back({d0, d1, ring[r], ring[(r + 1) % 4]});
  return TetMesh::build(std::move(pts), std::move(tets));
}

std::vector<FreeVertex> midpoint_slide_vertices(const TetMesh& subdivided) {
  std::vector<FreeVertex> out;
  for (int e = 1; e < 5; ++e) {
    const auto [i, j] = kTetEdges[e];
    out.push_back({static_cast<VertexId>(4 + e), Motion::Line,
                   subdivided.vertex(j) - subdivided.vertex(i)});
  }
  return out;
}

SlideScan scan_slide(const Tetra& parent, SlideVariant variant, double step, double t_max) {
  if (!(step > 0.0) || !(t_max >= step) || !(t_max < 0.5)) {
    throw Error(ErrorCode::InvalidArgument, "scan needs 0 < step <= t_max < 1/2");
  }
  SlideScan scan;
  const int n = static_cast<int>(std::floor(t_max / step + 1e-9));
  for (int k = 1; k <= n; ++k) {
    const double t = k * step;
    const TetMesh m = midpoint_subdivide(parent, {variant, t});
    const SlideSample s{t, objective_value(m, Objective::CompleteWC)};
    scan.samples.push_back(s);
    if (scan.samples.size() == 1 || s.margin > scan.best.margin) scan.best = s;
  }
  return scan;
}

Subdivision49 subdivide_49(const Subdiv49Params& params) {
  if (!(params.s_center > 0.0 && params.s_center < 1.0) ||
      !(params.s_corner > 0.0 && params.s_corner < 0.5)) {
    throw Error(ErrorCode::InvalidArgument,
                "subdivision needs 0 < s_center < 1 and 0 < s_corner < 1/2");
  }
  const Tetra parent = regular_tet();
  const Point3 centroid = 0.25 * (parent[0] + parent[1] + parent[2] + parent[3]);

  std::array<std::array<VertexId, 4>, 4> cut{};  // cut[i][j]: point on edge (i, j) near i
  std::vector<Point3> pts(parent.p.begin(), parent.p.end());
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      cut[i][j] = static_cast<VertexId>(pts.size());
      pts.push_back(parent[i] + params.s_corner * (parent[j] - parent[i]));
    }
  }
  auto center = [](int i) { return static_cast<VertexId>(16 + i); };
  auto face = [](int i) { return static_cast<VertexId>(20 + i); };
  for (int i = 0; i < 4; ++i) pts.push_back(centroid + params.s_center * (parent[i] - centroid));
  for (int i = 0; i < 4; ++i) {
    Point3 c{};
    for (int j = 0; j < 4; ++j) {
      if (j != i) c += parent[j] / 3.0;
    }
    pts.push_back(c);
  }

  auto others = [](int i) {
    std::array<int, 3> o{};
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) o[k++] = j;
    }
    return o;
  };

  std::vector<TetVerts> tets;
  for (int i = 0; i < 4; ++i) {
    const auto o = others(i);
    tets.push_back({static_cast<VertexId>(i), cut[i][o[0]], cut[i][o[1]], cut[i][o[2]]});
    tets.push_back({cut[i][o[0]], cut[i][o[1]], cut[i][o[2]], center(i)});
    tets.push_back({center(o[0]), center(o[1]), center(o[2]), face(i)});
  }
  tets.push_back({center(0), center(1), center(2), center(3)});
  // Octahedral gap along parent edge (i, j), split around the diagonal from
  // the cut near i to the central vertex of j.
  for (auto [i, j] : kTetEdges) {
    int k = -1, l = -1;
    for (int m = 0; m < 4; ++m) {
      if (m == i || m == j) continue;
      (k < 0 ? k : l) = m;
    }
    const std::array<VertexId, 4> ring{face(k), cut[j][i], face(l), center(i)};
    for (int r = 0; r < 4; ++r) tets.push_back({cut[i][j], center(j), ring[r], ring[(r + 1) % 4]});
  }
  for (int j = 0; j < 4; ++j) {
    for (int l = 0; l < 4; ++l) {
      if (l == j) continue;
      std::array<int, 2> rest{};
      int k = 0;
      for (int m = 0; m < 4; ++m) {
        if (m != j && m != l) rest[k++] = m;
      }
      tets.push_back({face(l), cut[j][rest[0]], cut[j][rest[1]], center(j)});
    }
  }

  // Consistently oriented pieces always sum to the parent volume with sign;
  // the unsigned sum exceeds it exactly when some piece is inverted.
  std::vector<double> vols;
  for (const TetVerts& t : tets) {
    vols.push_back(signed_volume(Tetra{{pts[t[0]], pts[t[1]], pts[t[2]], pts[t[3]]}}));
  }
  double total = 0.0;
  for (double v : vols) total += std::abs(v);
  const double parent_volume = std::abs(signed_volume(parent));
  if (std::abs(total - parent_volume) > 1e-9 * parent_volume) {
    throw Error(ErrorCode::InvalidArgument, "subdivision parameters make the pieces overlap");
  }
  for (double v : vols) {
    if (std::abs(v) <= kDegeneracyTol * parent_volume) {
      throw Error(ErrorCode::InvalidArgument, "subdivision parameters flatten a piece");
    }
  }

  Subdivision49 out{TetMesh::build(pts, std::move(tets)), {}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) out.free_vertices.push_back({cut[i][j], Motion::Line, parent[j] - parent[i]});
    }
  }
  for (int i = 0; i < 4; ++i) out.free_vertices.push_back({center(i), Motion::Free, {}});
  for (int i = 0; i < 4; ++i) {
    out.free_vertices.push_back({face(i), Motion::Plane, pts[face(i)] - centroid});
  }
  return out;
}

CubeCornerAudit cube_corner_audit(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  std::normal_distribution<double> gauss(0.0, 1.0);
  CubeCornerAudit audit;
  audit.trials = trials;
  audit.largest_min_h_over_r = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < trials; ++n) {
    const Vec3 s{std::exp(log_scale(rng)), std::exp(log_scale(rng)), std::exp(log_scale(rng))};
    // Uniform random rotation from a normalized Gaussian quaternion.
    double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
    const double qn = std::sqrt(w * w + x * x + y * y + z * z);
    w /= qn, x /= qn, y /= qn, z /= qn;
    auto rotate = [&](const Vec3& p) {
      return Vec3{(1 - 2 * (y * y + z * z)) * p.x + 2 * (x * y - w * z) * p.y + 2 * (x * z + w * y) * p.z,
                  2 * (x * y + w * z) * p.x + (1 - 2 * (x * x + z * z)) * p.y + 2 * (y * z - w * x) * p.z,
                  2 * (x * z - w * y) * p.x + 2 * (y * z + w * x) * p.y + (1 - 2 * (x * x + y * y)) * p.z};
    };
    const Tetra t{{rotate({0, 0, 0}), rotate({s.x, 0, 0}), rotate({0, s.y, 0}), rotate({0, 0, s.z})}};
    const TetQuality q = tet_quality(t);
    if (classify(q).is_3wc) ++audit.three_wc;
    audit.largest_min_h_over_r = std::max(audit.largest_min_h_over_r, q.min_h_over_r());
  }
  return audit;
}

}  // namespace wct
