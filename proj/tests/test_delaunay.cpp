#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "wct/delaunay.hpp"
#include "wct/error.hpp"
#include "wct/tilings.hpp"

using namespace wct;

namespace {

double hull_volume_of_box(const std::vector<Point3>& pts) {
  Vec3 lo = pts[0], hi = pts[0];
  for (const Point3& p : pts) {
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  return (hi.x - lo.x) * (hi.y - lo.y) * (hi.z - lo.z);
}

}  // namespace

TEST_CASE("four points give one tet") {
  const std::vector<Point3> pts{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const TetMesh m = delaunay3d(pts);
  CHECK(m.num_tets() == 1);
  CHECK(m.vertices() == pts);
}

TEST_CASE("input errors") {
  auto code = [](std::vector<Point3> pts) {
    try {
      (void)delaunay3d(pts);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}) == ErrorCode::TooFewPoints);
  CHECK(code({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 3, 0}}) == ErrorCode::AllCoplanar);
  CHECK(code({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}) == ErrorCode::AllCoplanar);
  CHECK(code({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == ErrorCode::DuplicatePoint);
}

TEST_CASE("random point sets match the brute-force oracle") {
  test::RandomTets gen(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point3> pts;
    for (int i = 0; i < 20 + trial % 6; ++i) pts.push_back(gen.point());
    const TetMesh m = delaunay3d(pts);
    CHECK(test::sorted_tet_set(m) == test::brute_force_delaunay(pts));
    CHECK(is_delaunay(m));
  }
}

TEST_CASE("larger random sets are Delaunay, conforming and cover the hull") {
  test::RandomTets gen(5);
  std::vector<Point3> pts;
  for (int i = 0; i < 300; ++i) pts.push_back(gen.point());
  // Box corners make the hull the unit cube.
  for (int c = 0; c < 8; ++c) pts.push_back({double(c & 1), double((c >> 1) & 1), double(c >> 2)});
  const TetMesh m = delaunay3d(pts);
  CHECK(is_delaunay(m));
  CHECK(is_conforming(m).conforming);
  CHECK(m.total_volume() == doctest::Approx(hull_volume_of_box(pts)).epsilon(1e-9));

  // Idempotent on its own vertex set.
  CHECK(test::sorted_tet_set(delaunay3d(m.vertices())) == test::sorted_tet_set(m));
}

TEST_CASE("cospherical grid points") {
  // A 4x4x4 grid: every cell is cospherical, so ties are everywhere.
  std::vector<Point3> pts;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) pts.push_back({double(i), double(j), double(k)});
  const TetMesh m = delaunay3d(pts);
  CHECK(m.total_volume() == doctest::Approx(27.0).epsilon(1e-12));
  CHECK(is_delaunay(m));
  CHECK(is_conforming(m).conforming);
  // Deterministic regardless of input order.
  std::vector<Point3> rev(pts.rbegin(), pts.rend());
  const TetMesh r = delaunay3d(rev);
  CHECK(r.num_tets() == m.num_tets());
}

TEST_CASE("coplanar and collinear subsets on the hull") {
  // Points on the faces of a cube, including many coplanar quadruples.
  std::vector<Point3> pts;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) pts.push_back({i / 2.0, j / 2.0, k / 2.0});
  pts.push_back({0.3, 0.4, 0.0});
  pts.push_back({1.0, 0.7, 0.2});
  const TetMesh m = delaunay3d(pts);
  CHECK(m.total_volume() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(is_delaunay(m));
  CHECK(is_conforming(m).conforming);
}

TEST_CASE("lattice points reproduce the lattice tiling") {
  const LatticeParams p{0.7, 0.8};
  // Triangulate a box one layer larger on each side and compare the tets
  // that lie entirely inside the inner box.
  const TilingExtent outer{{-1, 4}, {-1, 4}, {-1, 3}}, inner{{0, 3}, {0, 3}, {0, 2}};
  const std::vector<Point3> pts = lattice_points(p, outer);
  const TetMesh dt = delaunay3d(pts);
  const TetMesh direct = space_tiling(p, inner);

  auto inner_index = [&](VertexId v) -> int {
    const int nj = outer.j.count(), nk = outer.k.count();
    const int i = outer.i.lo + static_cast<int>(v) / (nj * nk);
    const int j = outer.j.lo + static_cast<int>(v) / nk % nj;
    const int k = outer.k.lo + static_cast<int>(v) % nk;
    if (i < inner.i.lo || i > inner.i.hi || j < inner.j.lo || j > inner.j.hi || k < inner.k.lo ||
        k > inner.k.hi) {
      return -1;
    }
    return ((i - inner.i.lo) * inner.j.count() + (j - inner.j.lo)) * inner.k.count() + (k - inner.k.lo);
  };
  test::TetSet from_dt;
  for (TetVerts t : dt.tets()) {
    bool inside = true;
    for (VertexId& v : t) {
      const int w = inner_index(v);
      inside = inside && w >= 0;
      v = static_cast<VertexId>(std::max(w, 0));
    }
    if (!inside) continue;
    std::sort(t.begin(), t.end());
    from_dt.insert(t);
  }
  CHECK(from_dt == test::sorted_tet_set(direct));
}
