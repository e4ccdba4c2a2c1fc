#include "wct/tilings.hpp"

#include <cmath>
#include <string>

#include "wct/error.hpp"

namespace wct {

namespace {

using Offset = std::array<int, 3>;

// The six tets of the cell with lower corner (i, j, k), as index offsets,
// positively oriented for any a, b > 0. Rows 0-3 are type 1 (triangle of one
// plane plus a vertex of the next), rows 4-5 are type 2 (edge plus edge).
constexpr std::array<std::array<Offset, 4>, 6> kCellTets{{
    {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
    {{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}, {1, 1, 0}}},
    {{{0, 0, 1}, {1, 0, 1}, {1, 0, 0}, {0, 1, 1}}},
    {{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 0}}},
    {{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}},
    {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}}},
}};

void require_positive(const LatticeParams& params) {
  if (!(params.a > 0.0) || !(params.b > 0.0) || !std::isfinite(params.a) ||
      !std::isfinite(params.b)) {
    throw Error(ErrorCode::InvalidArgument, "lattice parameters a and b must be positive");
  }
}

void require_nonempty(const IndexRange& r, const char* name) {
  if (r.hi < r.lo) {
    throw Error(ErrorCode::InvalidArgument, std::string("empty ") + name + " range");
  }
}

TetMesh scaled(const TetMesh& m, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::InvalidArgument, "scale must be positive");
  }
  if (scale == 1.0) return m;
  std::vector<Point3> v = m.vertices();
  for (Point3& p : v) p *= scale;
  return m.with_vertices(std::move(v));
}

}  // namespace

Point3 LatticeParams::point(int i, int j, int k) const {
  return {i + 0.5 * j + 0.5 * k, a * j, b * k};
}

Tetra sommerville_tet() {
  return Tetra{{Point3{-1, -2, 0}, Point3{1, 0, -2}, Point3{-1, 2, 0}, Point3{1, 0, 2}}};
}

std::vector<Point3> lattice_points(const LatticeParams& params, const TilingExtent& extent) {
  require_nonempty(extent.i, "i");
  require_nonempty(extent.j, "j");
  require_nonempty(extent.k, "k");
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>(extent.i.count()) * extent.j.count() * extent.k.count());
  for (int i = extent.i.lo; i <= extent.i.hi; ++i) {
    for (int j = extent.j.lo; j <= extent.j.hi; ++j) {
      for (int k = extent.k.lo; k <= extent.k.hi; ++k) pts.push_back(params.point(i, j, k));
    }
  }
  return pts;
}

TetMesh space_tiling(const LatticeParams& params, const TilingExtent& extent) {
  require_positive(params);
  for (const IndexRange* r : {&extent.i, &extent.j, &extent.k}) {
    if (r->count() < 2) {
      throw Error(ErrorCode::InvalidArgument, "tiling extent needs two index values per axis");
    }
  }
  const int nj = extent.j.count(), nk = extent.k.count();
  auto id = [&](int i, int j, int k) {
    return static_cast<VertexId>(((i - extent.i.lo) * nj + (j - extent.j.lo)) * nk +
                                 (k - extent.k.lo));
  };
  std::vector<TetVerts> tets;
  for (int i = extent.i.lo; i < extent.i.hi; ++i) {
    for (int j = extent.j.lo; j < extent.j.hi; ++j) {
      for (int k = extent.k.lo; k < extent.k.hi; ++k) {
        for (const auto& cell : kCellTets) {
          TetVerts t{};
          for (int v = 0; v < 4; ++v) t[v] = id(i + cell[v][0], j + cell[v][1], k + cell[v][2]);
          tets.push_back(t);
        }
      }
    }
  }
  return TetMesh::build(lattice_points(params, extent), std::move(tets));
}

TetMesh slab_tiling(const LatticeParams& params, int layers, double scale) {
  if (layers < 1) throw Error(ErrorCode::InvalidArgument, "slab needs at least one layer");
  return scaled(space_tiling(params, {{0, 4}, {0, 4}, {0, layers}}), scale);
}

TetMesh prism_tiling(const PrismSpec& spec) {
  if (spec.p < 1 || spec.q < 1) {
    throw Error(ErrorCode::InvalidArgument, "prism side counts must be at least 1");
  }
  const double h = std::sqrt(2.0) / 2.0;
  return scaled(space_tiling({h, h}, {{0, 4}, {0, spec.p}, {0, spec.q}}), spec.scale);
}

}  // namespace wct
