#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "wct/error.hpp"
#include "wct/mesh.hpp"
#include "wct/subdivision.hpp"
#include "wct/tilings.hpp"

using namespace wct;

namespace {

TetMesh single(const Tetra& t) {
  return TetMesh::build({t.p.begin(), t.p.end()}, {{0, 1, 2, 3}});
}

// Two tets glued along the triangle (0, 1, 2).
TetMesh two_tets(Point3 top, Point3 bottom) {
  return TetMesh::build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, top, bottom}, {{0, 1, 2, 3}, {0, 1, 2, 4}});
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("build derives faces and edges") {
  const TetMesh one = single(regular_tet());
  CHECK(one.num_faces() == 4);
  CHECK(one.num_edges() == 6);
  CHECK(one.interior_vertices().empty());

  const TetMesh two = two_tets({0.2, 0.2, 1}, {0.2, 0.2, -1});
  CHECK(two.num_faces() == 7);
  CHECK(two.num_edges() == 9);
  std::size_t interior = 0;
  for (const auto& [key, uses] : two.faces()) interior += uses.size() == 2;
  CHECK(interior == 1);
}

TEST_CASE("build canonicalizes orientation") {
  const Tetra reg = regular_tet();
  const TetMesh m = TetMesh::build({reg.p.begin(), reg.p.end()}, {{0, 1, 3, 2}});
  CHECK(signed_volume(m.tetra(0)) > 0);
  CHECK(m.total_volume() == doctest::Approx(std::abs(signed_volume(reg))));
}

TEST_CASE("build rejects invalid input") {
  const Tetra reg = regular_tet();
  const std::vector<Point3> pts(reg.p.begin(), reg.p.end());
  CHECK(code_of([&] { TetMesh::build(pts, {{0, 1, 2, 4}}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { TetMesh::build(pts, {{0, 1, 2, 2}}); }) == ErrorCode::DegenerateTet);
  CHECK(code_of([&] { TetMesh::build(pts, {{0, 1, 2, 3}, {3, 2, 1, 0}}); }) ==
        ErrorCode::DuplicateTet);
  const std::vector<Point3> flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK(code_of([&] { TetMesh::build(flat, {{0, 1, 2, 3}}); }) == ErrorCode::DegenerateTet);
  const TetMesh m = TetMesh::build(pts, {{0, 1, 2, 3}});
  std::vector<Point3> inverted = pts;
  std::swap(inverted[2], inverted[3]);
  CHECK(code_of([&] { (void)m.with_vertices(inverted); }) == ErrorCode::DegenerateTet);
}

TEST_CASE("conformity") {
  CHECK(is_conforming(single(regular_tet())).conforming);
  CHECK(is_conforming(two_tets({0.2, 0.2, 1}, {0.2, 0.2, -1})).conforming);

  // Second copy shifted so one of its vertices lies inside the first.
  const Tetra reg = regular_tet();
  std::vector<Point3> pts(reg.p.begin(), reg.p.end());
  for (const Point3& p : reg.p) pts.push_back(p + Vec3{0.3, 0.1, 0.2});
  const TetMesh overlap = TetMesh::build(pts, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  const ConformityReport r = is_conforming(overlap);
  CHECK_FALSE(r.conforming);
  CHECK(r.overlapping_pairs == 1);
  CHECK_FALSE(r.diagnostics.empty());

  // A vertex in the middle of a face of the neighbor (hanging node).
  const TetMesh hanging = TetMesh::build(
      {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 1}, {0.5, 0.5, 0}, {0, 0, -1}, {1, 0, 0}},
      {{0, 1, 2, 3}, {0, 6, 4, 5}});
  const ConformityReport h = is_conforming(hanging);
  CHECK_FALSE(h.conforming);

  // Three tets on one face.
  const TetMesh fan = TetMesh::build(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0.2, 0.2, 1}, {0.2, 0.2, -1}, {0.3, 0.3, 2}},
      {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}});
  const ConformityReport f = is_conforming(fan);
  CHECK(f.overshared_faces == 1);
  CHECK(code_of([&] { (void)boundary_faces(fan); }) == ErrorCode::NotConforming);
}

TEST_CASE("conformity is invariant under relabeling") {
  const TetMesh m = space_tiling({0.7, 0.8}, {{0, 2}, {0, 2}, {0, 2}});
  std::vector<VertexId> perm(m.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(2);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Point3> pts(m.num_vertices());
  for (VertexId v = 0; v < m.num_vertices(); ++v) pts[perm[v]] = m.vertex(v);
  std::vector<TetVerts> tets = m.tets();
  for (TetVerts& t : tets)
    for (VertexId& v : t) v = perm[v];
  const TetMesh relabeled = TetMesh::build(pts, tets);
  const ConformityReport a = is_conforming(m), b = is_conforming(relabeled);
  CHECK(a.conforming);
  CHECK(b.conforming);
  CHECK(a.overshared_faces == b.overshared_faces);
  CHECK(a.overlapping_pairs == b.overlapping_pairs);
  CHECK(a.hanging_vertices == b.hanging_vertices);
}

TEST_CASE("boundary faces") {
  CHECK(boundary_faces(single(regular_tet())).size() == 4);
  CHECK(boundary_faces(midpoint_subdivide(regular_tet(), {})).size() == 16);

  const LatticeParams p{0.7, 0.8};
  const TetMesh slab = slab_tiling(p, 2);
  double zmin = 1e300, zmax = -1e300;
  for (const Point3& v : slab.vertices()) {
    zmin = std::min(zmin, v.z);
    zmax = std::max(zmax, v.z);
  }
  CHECK(zmin == doctest::Approx(0.0));
  CHECK(zmax == doctest::Approx(2 * p.b));
}

TEST_CASE("mesh quality aggregates tet quality") {
  const auto& ex = test::example_tets();
  const QualityReport one = mesh_quality(single(ex[0].tet));
  CHECK(std::abs(one.h_over_r.min - ex[0].hr_min) <= 0.005);
  CHECK(std::abs(one.h_over_r.max - ex[0].hr_max) <= 0.005);
  CHECK(std::abs(one.face_angle_deg.min - ex[0].face_min) <= 0.01);
  CHECK(std::abs(one.dihedral_angle_deg.max - ex[0].dihedral_max) <= 0.01);
  CHECK(one.completely_wc);

  // The acute and 3WC-only examples side by side: the report is the envelope.
  std::vector<Point3> pts(ex[0].tet.p.begin(), ex[0].tet.p.end());
  for (const Point3& p : ex[5].tet.p) pts.push_back(p + Vec3{5, 0, 0});
  const TetMesh pair = TetMesh::build(pts, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  const QualityReport r = mesh_quality(pair);
  const TetQuality a = tet_quality(ex[0].tet), b = tet_quality(ex[5].tet);
  CHECK(r.h_over_r.min == doctest::Approx(std::min(a.min_h_over_r(), b.min_h_over_r())));
  CHECK(r.h_over_r.max == doctest::Approx(std::max(a.max_h_over_r(), b.max_h_over_r())));
  CHECK(r.face_angle_deg.max == doctest::Approx(b.max_face_angle()));
  CHECK(r.face_angle_deg.argmax == 1);
  CHECK(r.r_over_l.min == doctest::Approx(a.r_over_l));
  CHECK(r.r_over_l.max == doctest::Approx(b.r_over_l));
  CHECK(r.all_3wc);
  CHECK_FALSE(r.all_2wc);
  CHECK_FALSE(r.completely_wc);
  CHECK(r.num_tets == 2);
  CHECK(r.num_vertices == 8);
}

TEST_CASE("Delaunay check") {
  CHECK(is_delaunay(single(regular_tet())));
  // Shared face (0,1,2) with apexes far apart: each apex is outside the
  // other tet's sphere.
  CHECK(is_delaunay(two_tets({0.3, 0.3, 1}, {0.3, 0.3, -1})));
  // Flat shared face with apexes close to it: each apex lies inside the
  // neighbor's circumsphere, so the face should be flipped.
  const TetMesh flip = two_tets({0.3, 0.3, 0.05}, {0.3, 0.3, -0.05});
  const Circumsphere s = circumsphere_tet(flip.tetra(0));
  REQUIRE(distance(flip.vertex(4), s.center) < s.radius);
  CHECK_FALSE(is_delaunay(flip));

  const TetMesh slab = slab_tiling({0.6, 0.6}, 2);
  REQUIRE(mesh_quality(slab).completely_wc);
  CHECK(is_delaunay(slab));
}
