#pragma once

#include <array>

#include "wct/vec3.hpp"

// Single-simplex kernel: circumspheres, the signed circumcenter height h/R,
// face and dihedral angles, and the well-centeredness predicates.
//
// Vertex/facet numbering for a tetrahedron: facet i is the triangle opposite
// vertex i, with its vertices listed in increasing index order. Edges are
// enumerated (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).

namespace wct {

struct Triangle {
  std::array<Point3, 3> p;

  const Point3& operator[](int i) const { return p[i]; }
};

struct Tetra {
  std::array<Point3, 4> p;

  const Point3& operator[](int i) const { return p[i]; }

  /// Triangle opposite vertex i.
  Triangle facet(int i) const;
};

struct Circumsphere {
  Point3 center;
  double radius = 0.0;
};

struct TetQuality {
  std::array<double, 4> h_over_r{};             // one per facet
  std::array<double, 12> face_angles_deg{};     // 3 per facet, facet-major
  std::array<double, 6> dihedral_angles_deg{};  // one per edge
  double r_over_l = 0.0;                        // circumradius / shortest edge

  double min_h_over_r() const;
  double max_h_over_r() const;
  double min_face_angle() const;
  double max_face_angle() const;
  double min_dihedral() const;
  double max_dihedral() const;
};

struct WcClass {
  bool is_2wc = false;
  bool is_3wc = false;
  bool is_dihedral_acute = false;

  bool completely_wc() const { return is_2wc && is_3wc; }
};

inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Relative degeneracy threshold; scaled by the longest edge to the power of
/// the simplex dimension.
inline constexpr double kDegeneracyTol = 1e-12;

double signed_volume(const Tetra& t);
double longest_edge(const Tetra& t);
double shortest_edge(const Tetra& t);

/// Throws Error(DegenerateSimplex) when the four points are coplanar within
/// kDegeneracyTol * longest_edge^3.
Circumsphere circumsphere_tet(const Tetra& t);

/// Center lies in the plane of the triangle. Throws on collinear input.
Circumsphere circumcircle_tri(const Triangle& t);

/// Signed height of the circumcenter above the plane of the facet opposite
/// vertex facet_index; positive toward that vertex.
double signed_facet_height(const Tetra& t, int facet_index);

TetQuality tet_quality(const Tetra& t);

/// Strict predicates: h/R > 0, angles < 90 degrees. Borderline simplices are
/// not well-centered.
WcClass classify(const Tetra& t);
WcClass classify(const TetQuality& q);

/// True iff v is strictly farther from the facet circumcenter than the facet
/// circumradius.
bool outside_equatorial_ball(const Triangle& facet, const Point3& v);

/// Interior angle at vertex `at` of the triangle (at, b, c), in degrees.
double angle_deg(const Point3& at, const Point3& b, const Point3& c);

/// Interior dihedral angle along edge (a, b) between the triangles (a, b, c)
/// and (a, b, d), in degrees.
double dihedral_deg(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

}  // namespace wct
