#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wct/geometry.hpp"

namespace wct {

using VertexId = std::uint32_t;
using TetId = std::uint32_t;
using TetVerts = std::array<VertexId, 4>;

/// Sorted vertex triple; unique per geometric face.
using FaceKey = std::array<VertexId, 3>;
/// Sorted vertex pair; unique per geometric edge.
using EdgeKey = std::array<VertexId, 2>;

FaceKey make_face_key(VertexId a, VertexId b, VertexId c);
EdgeKey make_edge_key(VertexId a, VertexId b);

/// Indexed tetrahedral complex. Immutable once built: every tetrahedron has
/// positive signed volume, no vertex repeats inside a tet, and no two tets
/// share the same vertex set. Faces and edges are derived at build time.
class TetMesh {
 public:
  struct FaceUse {
    TetId tet;
    int local;  // facet index inside the tet (opposite vertex `local`)
  };

  TetMesh() = default;

  /// Validates and canonicalizes: tets with negative volume get two vertices
  /// swapped. Orientation is decided exactly, so only exactly coplanar tets
  /// count as zero volume. Throws IndexOutOfRange, DegenerateTet or
  /// DuplicateTet.
  static TetMesh build(std::vector<Point3> vertices, std::vector<TetVerts> tets);

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<TetVerts>& tets() const { return tets_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_tets() const { return tets_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Point3& vertex(VertexId v) const { return vertices_[v]; }
  Tetra tetra(TetId t) const;

  const std::map<FaceKey, std::vector<FaceUse>>& faces() const { return faces_; }
  const std::vector<EdgeKey>& edges() const { return edges_; }

  /// Tets incident to each vertex, in increasing tet order.
  const std::vector<std::vector<TetId>>& vertex_tets() const { return vertex_tets_; }

  /// Vertices not on any boundary face. Only meaningful for meshes whose
  /// faces have at most two incident tets.
  std::vector<VertexId> interior_vertices() const;

  /// Same connectivity, new coordinates; revalidated.
  TetMesh with_vertices(std::vector<Point3> vertices) const;

  double total_volume() const;

 private:
  static TetMesh build_impl(std::vector<Point3> vertices, std::vector<TetVerts> tets,
                            bool require_positive);

  std::vector<Point3> vertices_;
  std::vector<TetVerts> tets_;
  std::map<FaceKey, std::vector<FaceUse>> faces_;
  std::vector<EdgeKey> edges_;
  std::vector<std::vector<TetId>> vertex_tets_;
};

struct ConformityReport {
  bool conforming = true;
  std::size_t overshared_faces = 0;  // faces with more than two incident tets
  std::size_t overlapping_pairs = 0;  // tet pairs with intersecting interiors
  std::size_t hanging_vertices = 0;  // vertex inside a tet it does not belong to
  std::vector<std::string> diagnostics;
};

/// Face-to-face check: every face has one or two incident tets, no two tets
/// overlap in volume (separating-axis test at 1e-9 relative tolerance) and no
/// mesh vertex lies in a closed tet it is not a corner of.
ConformityReport is_conforming(const TetMesh& m);

/// Faces with exactly one incident tet, in FaceKey order. Throws
/// NotConforming when any face has more than two incident tets.
std::vector<FaceKey> boundary_faces(const TetMesh& m);

struct QualityRange {
  double min = 0.0;
  double max = 0.0;
  TetId argmin = 0;
  TetId argmax = 0;
};

/// Mesh-wide envelope of the per-tet quality statistics.
struct QualityReport {
  QualityRange h_over_r;
  QualityRange face_angle_deg;
  QualityRange dihedral_angle_deg;
  QualityRange r_over_l;
  std::size_t num_tets = 0;
  std::size_t num_faces = 0;
  std::size_t num_edges = 0;
  std::size_t num_vertices = 0;
  bool all_2wc = false;
  bool all_3wc = false;
  bool completely_wc = false;
};

/// Throws DegenerateTet naming the offending tet. Requires a non-empty mesh.
QualityReport mesh_quality(const TetMesh& m);

/// True iff no mesh vertex lies strictly inside (depth > 1e-9 R) the
/// circumsphere of any tet. Throws NotConforming on overshared faces.
bool is_delaunay(const TetMesh& m);

}  // namespace wct
