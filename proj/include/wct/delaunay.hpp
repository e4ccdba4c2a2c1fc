#pragma once

#include <span>

#include "wct/mesh.hpp"

namespace wct {

/// Delaunay tetrahedralization of a point set (incremental Bowyer-Watson).
///
/// Predicates are exact for the double inputs. Cospherical and coplanar
/// ties are broken by symbolic perturbation in lexicographic point order,
/// so the result is a valid triangulation of the convex hull for any input
/// with four non-coplanar points. Points are inserted in lexicographic order
/// and the output tets are sorted, making the result deterministic.
///
/// The returned mesh keeps the input vertex order. Throws TooFewPoints,
/// AllCoplanar, DuplicatePoint.
TetMesh delaunay3d(std::span<const Point3> points);

}  // namespace wct
