#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "wct/mesh.hpp"

// Fixed-connectivity vertex smoothing toward well-centeredness. Each sweep
// visits the free vertices in index order and moves one vertex at a time
// along an ascent direction of the smallest quality value among its incident
// tets, accepting a move only if that local minimum strictly increases and
// no incident tet inverts. A sweep in which no single vertex can improve
// falls back to one joint step of all free vertices, accepted only if the
// mesh-wide objective strictly increases. The objective is therefore
// monotone.

namespace wct {

enum class Objective {
  MinHR,       // smallest facet h/R
  CompleteWC,  // min(smallest h/R, smallest (90 - face angle) / 90)
};

enum class Motion {
  Free,   // anywhere in space
  Line,   // along `axis` through the current position
  Plane,  // in the plane through the current position with normal `axis`
};

struct FreeVertex {
  VertexId id = 0;
  Motion motion = Motion::Free;
  Vec3 axis{};
};

struct OptimizeSpec {
  std::vector<FreeVertex> free_vertices;
  Objective objective = Objective::CompleteWC;
  int max_iters = 500;
  double step_init = 0.1;  // first trial step, as a fraction of the shortest incident edge
  double tol = std::numeric_limits<double>::infinity();  // stop once the objective reaches it
  std::uint64_t seed = 1;  // drives fallback directions at stationary points
};

enum class Termination { ToleranceReached, MaxIterations, NoImprovement };

const char* to_string(Termination t);

struct SweepRecord {
  double min_h_over_r = 0.0;
  double max_face_angle_deg = 0.0;
  double objective = 0.0;
  std::size_t accepted_moves = 0;
};

/// Record 0 describes the input mesh; record k the mesh after sweep k.
struct OptimizeTrace {
  std::vector<SweepRecord> sweeps;
  Termination termination = Termination::MaxIterations;
};

struct OptimizeResult {
  TetMesh mesh;
  OptimizeTrace trace;
};

/// Throws InvalidArgument for out-of-range or repeated free vertex ids, a
/// non-positive step_init or max_iters < 1; NotConforming when a face has
/// more than two incident tets. The input mesh is returned unchanged when it
/// already meets tol.
OptimizeResult optimize(const TetMesh& m, const OptimizeSpec& spec);

/// Mesh-wide objective. Throws DegenerateTet.
double objective_value(const TetMesh& m, Objective objective);

/// Per-tet objective: the smallest of the tet's quality values.
double tet_objective(const Tetra& t, Objective objective);

/// All vertices off the boundary, unconstrained.
std::vector<FreeVertex> interior_free_vertices(const TetMesh& m);

}  // namespace wct
