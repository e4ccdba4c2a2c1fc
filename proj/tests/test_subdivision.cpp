#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "wct/error.hpp"
#include "wct/subdivision.hpp"

using namespace wct;

namespace {

bool inside_parent(const Tetra& parent, const Point3& p, double tol) {
  const double v = signed_volume(parent);
  for (int i = 0; i < 4; ++i) {
    Tetra t = parent;
    t.p[i] = p;
    if (signed_volume(t) / v < -tol) return false;
  }
  return true;
}

void check_partition(const TetMesh& m, const Tetra& parent) {
  CHECK(is_conforming(m).conforming);
  const double v = std::abs(signed_volume(parent));
  CHECK(std::abs(m.total_volume() - v) <= 1e-9 * v);
  for (const Point3& p : m.vertices()) CHECK(inside_parent(parent, p, 1e-12));
}

}  // namespace

TEST_CASE("uniform midpoint subdivision of the regular tet") {
  const Tetra parent = regular_tet();
  const TetMesh m = midpoint_subdivide(parent, {});
  REQUIRE(m.num_tets() == 8);
  check_partition(m, parent);

  // Corner tets are half-size copies of the parent.
  for (TetId t = 0; t < 4; ++t) {
    const TetQuality q = tet_quality(m.tetra(t));
    CHECK(q.min_h_over_r() == doctest::Approx(1.0 / 3));
    CHECK(q.max_face_angle() == doctest::Approx(60.0));
  }
  // Every central tet has its circumcenter on a facet and a right face angle.
  for (TetId t = 4; t < 8; ++t) {
    const TetQuality q = tet_quality(m.tetra(t));
    CHECK(std::abs(q.min_h_over_r()) <= 1e-9);
    CHECK(std::abs(q.max_face_angle() - 90.0) <= 1e-7);
    CHECK_FALSE(classify(q).is_3wc);
  }
  // The diagonal runs between the midpoints of edges (0,1) and (2,3).
  const Point3 d0 = m.vertex(4), d1 = m.vertex(9);
  CHECK(distance(d0, 0.5 * (parent[0] + parent[1])) < 1e-15);
  CHECK(distance(d1, 0.5 * (parent[2] + parent[3])) < 1e-15);
  for (TetId t = 4; t < 8; ++t) {
    const TetVerts& tv = m.tets()[t];
    CHECK(std::count(tv.begin(), tv.end(), 4u) == 1);
    CHECK(std::count(tv.begin(), tv.end(), 9u) == 1);
  }
}

TEST_CASE("slide parameters are validated") {
  const Tetra parent = regular_tet();
  CHECK_THROWS_AS(midpoint_subdivide(parent, {SlideVariant::Uniform, 0.1}), Error);
  CHECK_THROWS_AS(midpoint_subdivide(parent, {SlideVariant::SchemeA, -0.01}), Error);
  CHECK_THROWS_AS(midpoint_subdivide(parent, {SlideVariant::SchemeB, 0.5}), Error);
  const Tetra flat{{Point3{0, 0, 0}, Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{1, 1, 0}}};
  CHECK_THROWS_AS(midpoint_subdivide(flat, {}), Error);
}

TEST_CASE("slid points stay on their edges") {
  const Tetra parent = regular_tet();
  for (SlideVariant variant : {SlideVariant::SchemeA, SlideVariant::SchemeB}) {
    const TetMesh m = midpoint_subdivide(parent, {variant, 0.1});
    check_partition(m, parent);
    const auto free = midpoint_slide_vertices(m);
    REQUIRE(free.size() == 4);
    for (const FreeVertex& f : free) {
      CHECK(f.motion == Motion::Line);
      CHECK(f.id >= 5);
      CHECK(f.id <= 8);
      const Point3 mid = m.vertex(f.id);
      // Offset from the edge midpoint is one tenth of the edge, along the edge.
      const int e = static_cast<int>(f.id) - 4;
      const Point3 a = parent[kTetEdges[e][0]], b = parent[kTetEdges[e][1]];
      const Vec3 off = mid - 0.5 * (a + b);
      CHECK(norm(off) == doctest::Approx(0.1 * distance(a, b)));
      CHECK(norm(cross(off, b - a)) < 1e-12);
    }
  }
}

TEST_CASE("scheme A moves toward the endpoints on the diagonal edge") {
  const Tetra parent = regular_tet();
  const TetMesh m = midpoint_subdivide(parent, {SlideVariant::SchemeA, 0.1});
  // Edges (0,2) (0,3) move toward 0; edges (1,2) (1,3) toward 1.
  CHECK(distance(m.vertex(5), parent[0]) < distance(m.vertex(5), parent[2]));
  CHECK(distance(m.vertex(6), parent[0]) < distance(m.vertex(6), parent[3]));
  CHECK(distance(m.vertex(7), parent[1]) < distance(m.vertex(7), parent[2]));
  CHECK(distance(m.vertex(8), parent[1]) < distance(m.vertex(8), parent[3]));
}

TEST_CASE("scheme B moves around the cycle 0 2 1 3") {
  const Tetra parent = regular_tet();
  const TetMesh m = midpoint_subdivide(parent, {SlideVariant::SchemeB, 0.1});
  CHECK(distance(m.vertex(5), parent[2]) < distance(m.vertex(5), parent[0]));  // 0 -> 2
  CHECK(distance(m.vertex(6), parent[0]) < distance(m.vertex(6), parent[3]));  // 3 -> 0
  CHECK(distance(m.vertex(7), parent[1]) < distance(m.vertex(7), parent[2]));  // 2 -> 1
  CHECK(distance(m.vertex(8), parent[3]) < distance(m.vertex(8), parent[1]));  // 1 -> 3
}

TEST_CASE("slide scan finds completely well-centered subdivisions") {
  const Tetra parent = regular_tet();
  for (SlideVariant variant : {SlideVariant::SchemeA, SlideVariant::SchemeB}) {
    const SlideScan scan = scan_slide(parent, variant);
    CHECK(scan.samples.size() == 50);
    CHECK(scan.best.t > 0);
    for (const SlideSample& s : scan.samples) CHECK(s.margin <= scan.best.margin);
    const TetMesh m = midpoint_subdivide(parent, {variant, scan.best.t});
    const QualityReport r = mesh_quality(m);
    MESSAGE("t = " << scan.best.t << ", min h/R = " << r.h_over_r.min
                   << ", max face angle = " << r.face_angle_deg.max);
    CHECK(r.h_over_r.min > 0.01);
    CHECK(r.face_angle_deg.max < 89.9);
    CHECK(r.completely_wc);
  }
  CHECK_THROWS_AS(scan_slide(parent, SlideVariant::SchemeA, 0.0), Error);
}

TEST_CASE("subdivision into 49 tets") {
  const Subdivision49 s = subdivide_49();
  const Tetra parent = regular_tet();
  CHECK(s.mesh.num_tets() == 49);
  CHECK(s.mesh.num_vertices() == 24);
  check_partition(s.mesh, parent);

  // Each parent face carries nine boundary triangles.
  CHECK(boundary_faces(s.mesh).size() == 36);

  std::size_t lines = 0, planes = 0, free = 0;
  for (const FreeVertex& f : s.free_vertices) {
    CHECK(f.id >= 4);
    if (f.motion == Motion::Line) ++lines;
    if (f.motion == Motion::Plane) ++planes;
    if (f.motion == Motion::Free) ++free;
  }
  CHECK(lines == 12);
  CHECK(planes == 4);
  CHECK(free == 4);

  CHECK_THROWS_AS(subdivide_49({0.0, 0.2}), Error);
  CHECK_THROWS_AS(subdivide_49({0.3, 0.5}), Error);
  CHECK_THROWS_AS(subdivide_49({0.95, 0.45}), Error);
}

TEST_CASE("cube-corner tets are never 3-well-centered") {
  const CubeCornerAudit a = cube_corner_audit(2000, 17);
  CHECK(a.trials == 2000);
  CHECK(a.three_wc == 0);
  CHECK(a.largest_min_h_over_r <= 1e-9);
}
