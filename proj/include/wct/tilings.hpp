#pragma once

#include <vector>

#include "wct/mesh.hpp"

// Lattice family of space tilings. Vertex (i, j, k) sits at
// i*u1 + j*u2 + k*u3 with u1 = (1,0,0), u2 = (1/2,a,0), u3 = (1/2,0,b).
// Each horizontal plane (fixed k) is a triangulated planar lattice; the
// tetrahedra between consecutive planes are hulls of a triangle of one plane
// with the vertex next to it in the other (type 1), or of an edge of one
// plane with an edge of the other (type 2).

namespace wct {

struct LatticeParams {
  double a = 0.0;
  double b = 0.0;

  Vec3 u1() const { return {1.0, 0.0, 0.0}; }
  Vec3 u2() const { return {0.5, a, 0.0}; }
  Vec3 u3() const { return {0.5, 0.0, b}; }
  Point3 point(int i, int j, int k) const;
};

/// Inclusive integer range of lattice indices.
struct IndexRange {
  int lo = 0;
  int hi = 0;

  int count() const { return hi - lo + 1; }
};

struct TilingExtent {
  IndexRange i;
  IndexRange j;
  IndexRange k;
};

struct PrismSpec {
  int p = 1;  // strips across y
  int q = 1;  // plane layers across z
  double scale = 1.0;
};

/// The space-filling tetrahedron that tiles the body-centered cubic
/// Delaunay triangulation.
Tetra sommerville_tet();

/// Points of the extent, ordered by (i, j, k) lexicographically. Throws
/// InvalidArgument on an empty range.
std::vector<Point3> lattice_points(const LatticeParams& params, const TilingExtent& extent);

/// Tiling of the parallelepiped spanned by the extent: six tetrahedra per
/// lattice cell, so every tet is whole. Vertex order matches lattice_points.
/// Throws InvalidArgument when a or b is not positive or any range spans
/// fewer than two index values.
TetMesh space_tiling(const LatticeParams& params, const TilingExtent& extent);

/// `layers` plane layers between z = 0 and z = scale * b * layers, over a
/// 4 x 4 lateral patch of cells; the whole mesh is scaled by `scale`.
TetMesh slab_tiling(const LatticeParams& params, int layers, double scale = 1.0);

/// Prism with rectangular cross-section p*a by q*b at a = b = sqrt(2)/2, so
/// the side ratio is p/q and every tet is congruent. Truncated to 4 cells
/// along the prism axis.
TetMesh prism_tiling(const PrismSpec& spec);

}  // namespace wct
