#pragma once

#include <cstdint>
#include <vector>

#include "wct/mesh.hpp"
#include "wct/optimizer.hpp"

namespace wct {

/// Regular tetrahedron (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).
Tetra regular_tet();

enum class SlideVariant { Uniform, SchemeA, SchemeB };

/// Midpoint slides. The octahedron left after cutting the four corners is
/// split along the diagonal joining the midpoints of edges (0,1) and (2,3);
/// those two midpoints never move. Each of the other four moves by t times
/// its edge length toward one endpoint:
///   SchemeA: toward the endpoint on edge (0,1).
///   SchemeB: toward the next vertex of the cycle 0 -> 2 -> 1 -> 3 -> 0.
struct SlideScheme {
  SlideVariant variant = SlideVariant::Uniform;
  double t = 0.0;
};

/// Eight children: corner tets 0-3 (corner i first), then the four tets
/// around the diagonal. Vertices: parent corners 0-3, then the edge points in
/// edge order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3). Throws DegenerateSimplex
/// for a flat parent and InvalidArgument for t outside [0, 1/2) or a nonzero
/// t with the Uniform variant.
TetMesh midpoint_subdivide(const Tetra& parent, const SlideScheme& scheme);

/// The four sliding edge points as line-constrained free vertices.
std::vector<FreeVertex> midpoint_slide_vertices(const TetMesh& subdivided);

struct SlideSample {
  double t = 0.0;
  double margin = 0.0;  // complete well-centeredness objective of the 8-tet mesh
};

struct SlideScan {
  SlideSample best;
  std::vector<SlideSample> samples;
};

/// Evaluates t = step, 2 step, ..., t_max and returns the sample with the
/// largest margin; ties go to the smallest t.
SlideScan scan_slide(const Tetra& parent, SlideVariant variant, double step = 0.005,
                     double t_max = 0.25);

struct Subdiv49Params {
  double s_center = 0.3;  // central tet scale about the centroid
  double s_corner = 0.2;  // corner cut, as a fraction of each edge
};

/// Subdivision of the regular tetrahedron into 49 tets: a scaled central
/// tet, four cones from its faces to the parent face centers, four cut-off
/// corners each coned to the nearest central vertex, twelve tets joining
/// each corner cut to a face center, and six octahedral gaps of four tets.
/// Each parent face carries the same nine-triangle surface pattern.
struct Subdivision49 {
  TetMesh mesh;
  /// Vertices the optimizer may move without changing the parent shape:
  /// edge points slide along their edge, face centers stay in their face,
  /// central vertices are free.
  std::vector<FreeVertex> free_vertices;
};

/// Vertex layout: corners 0-3, corner cuts 4-15 (cut on edge (i, j) near
/// corner i, in (i, j) order), central vertices 16-19, face centers 20-23
/// (face opposite corner i). Throws InvalidArgument unless
/// 0 < s_center < 1 and 0 < s_corner < 1/2 with the central tet clear of the
/// corner cuts.
Subdivision49 subdivide_49(const Subdiv49Params& params = {});

struct CubeCornerAudit {
  std::size_t trials = 0;
  std::size_t three_wc = 0;     // trials classified 3-well-centered
  double largest_min_h_over_r = 0.0;
};

/// Random axis scalings in [0.1, 10] and random rotations of the cube-corner
/// tet (0,0,0), (1,0,0), (0,1,0), (0,0,1).
CubeCornerAudit cube_corner_audit(std::size_t trials, std::uint64_t seed);

}  // namespace wct
