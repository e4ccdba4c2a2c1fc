#pragma once

// Shared test data: the six classification example tetrahedra with their
// reference quality tables, a random tetrahedron source, and a brute-force
// empty-circumsphere triangulation oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "wct/geometry.hpp"
#include "wct/mesh.hpp"

namespace wct::test {

struct ExampleTet {
  const char* name;
  Tetra tet;
  double hr_min, hr_max;
  double face_min, face_max;
  double dihedral_min, dihedral_max;
  double r_over_l;
  bool is_3wc, is_2wc, is_acute;
};

inline const std::array<ExampleTet, 6>& example_tets() {
  static const std::array<ExampleTet, 6> tets{{
      {"acute",
       {{Point3{0.6, -0.64, -0.48}, Point3{0.48, 0.8, -0.36}, Point3{-0.96, 0, -0.28},
         Point3{0, 0, 1}}},
       0.254, 0.371, 50.92, 67.08, 58.76, 76.98, 0.690, true, true, true},
      {"wc-obtuse-dihedral",
       {{Point3{0, 0.96, -0.28}, Point3{-0.744, -0.64, -0.192}, Point3{0.856, -0.48, -0.192},
         Point3{-0.48, 0.192, 0.856}}},
       0.224, 0.427, 46.26, 77.62, 52.71, 94.15, 0.733, true, true, false},
      {"none",
       {{Point3{0.224, -0.768, -0.6}, Point3{0.8, 0, -0.6}, Point3{0.224, 0.768, -0.6},
         Point3{-0.28, 0, 0.96}}},
       -0.029, 0.600, 29.89, 106.26, 35.42, 116.68, 1.042, false, false, false},
      {"acute-not-3wc",
       {{Point3{0.36, -0.8, -0.48}, Point3{0.768, 0.28, -0.576}, Point3{-0.6, 0.64, -0.48},
         Point3{0.576, 0.168, 0.8}}},
       -0.109, 0.562, 41.71, 83.76, 53.33, 85.72, 0.863, false, true, true},
      {"2wc-only",
       {{Point3{-0.152, 0.864, -0.48}, Point3{-0.64, -0.6, -0.48}, Point3{0.6, -0.64, -0.48},
         Point3{-0.192, -0.64, 0.744}}},
       -0.024, 0.630, 42.08, 85.44, 59.94, 91.20, 0.806, false, true, false},
      {"3wc-only",
       {{Point3{0, -0.6, -0.8}, Point3{0.64, -0.024, -0.768}, Point3{-0.64, -0.024, -0.768},
         Point3{0, 0.352, 0.936}}},
       0.112, 0.765, 25.69, 95.94, 40.33, 105.62, 1.161, true, false, false},
  }};
  return tets;
}

/// Four points uniform in the unit cube, rejecting volume below 1e-6.
class RandomTets {
 public:
  explicit RandomTets(std::uint64_t seed) : rng_(seed) {}

  Tetra next() {
    for (;;) {
      Tetra t;
      for (Point3& p : t.p) p = {u_(rng_), u_(rng_), u_(rng_)};
      if (std::abs(signed_volume(t)) >= 1e-6) return t;
    }
  }

  Point3 point() { return {u_(rng_), u_(rng_), u_(rng_)}; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> u_{0.0, 1.0};
};

using TetSet = std::set<std::array<VertexId, 4>>;

inline TetSet sorted_tet_set(const TetMesh& m) {
  TetSet s;
  for (TetVerts t : m.tets()) {
    std::sort(t.begin(), t.end());
    s.insert(t);
  }
  return s;
}

/// Every 4-subset whose circumsphere has no other input point inside or on
/// it. Equals the Delaunay triangulation for points in general position.
inline TetSet brute_force_delaunay(const std::vector<Point3>& pts) {
  TetSet out;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const Tetra t{{pts[a], pts[b], pts[c], pts[d]}};
          if (std::abs(signed_volume(t)) < 1e-12) continue;
          const Circumsphere s = circumsphere_tet(t);
          bool empty = true;
          for (std::size_t e = 0; e < n && empty; ++e) {
            if (e == a || e == b || e == c || e == d) continue;
            if (distance(pts[e], s.center) <= s.radius * (1 + 1e-12)) empty = false;
          }
          if (empty) {
            out.insert({static_cast<VertexId>(a), static_cast<VertexId>(b),
                        static_cast<VertexId>(c), static_cast<VertexId>(d)});
          }
        }
  return out;
}

}  // namespace wct::test
