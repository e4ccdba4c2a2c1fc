#pragma once

#include <cstddef>
#include <vector>

#include "wct/mesh.hpp"
#include "wct/optimizer.hpp"

// Unit-cube meshing: a fixed symmetric surface point set, interior seeds,
// Delaunay connectivity and optimization of the interior vertices.
//
// Four marked corners (0,0,0), (1,1,0), (1,0,1), (0,1,1) form one regular
// tetrahedron inscribed in the cube. Every cube face holds exactly two of
// them, on one diagonal; the face layout is the same on all six faces up to
// the cube's symmetries.

namespace wct {

/// The 8 corners, the 12 edge midpoints, and per face two points on the
/// marked diagonal at 0.35 / 0.65 and two on the other diagonal at
/// 0.295 / 0.705 (44 points). Ordered lexicographically.
std::vector<Point3> cube_surface_points();

/// The four marked corners.
std::vector<Point3> cube_marked_corners();

/// Cube center plus three seeds per marked corner, each in the corner's
/// region on a plane through the corner and the cube diagonal.
std::vector<Point3> default_interior_seeds();

struct CubePipelineOptions {
  OptimizeSpec optimize;  // free_vertices is filled in by the pipeline
  int rounds = 4;         // Delaunay + optimize rounds
  double scale = 1.0;     // edge length of the cube
};

struct CubePipelineResult {
  TetMesh mesh;
  QualityReport report;
  bool achieved_complete_wc = false;
  std::size_t tet_count = 0;
  int rounds_run = 0;
};

/// Triangulates surface + seeds, then alternates optimization of the interior
/// vertices with re-triangulation until the connectivity is stable or the
/// round budget is spent. The final mesh is the Delaunay triangulation of the
/// final positions. Throws InvalidArgument for a seed not strictly inside the
/// cube.
CubePipelineResult cube_pipeline(const std::vector<Point3>& interior_seeds,
                                 const CubePipelineOptions& options = {});

}  // namespace wct
