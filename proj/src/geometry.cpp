#include "wct/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wct/error.hpp"

namespace wct {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

template <std::size_t N>
double max_of(const std::array<double, N>& a) {
  return *std::max_element(a.begin(), a.end());
}

template <std::size_t N>
double min_of(const std::array<double, N>& a) {
  return *std::min_element(a.begin(), a.end());
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::DegenerateTet: return "DegenerateTet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateTet: return "DuplicateTet";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotConforming: return "NotConforming";
    case ErrorCode::AllCoplanar: return "AllCoplanar";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Triangle Tetra::facet(int i) const {
  Triangle f;
  int k = 0;
  for (int j = 0; j < 4; ++j) {
    if (j != i) f.p[k++] = p[j];
  }
  return f;
}

double TetQuality::min_h_over_r() const { return min_of(h_over_r); }
double TetQuality::max_h_over_r() const { return max_of(h_over_r); }
double TetQuality::min_face_angle() const { return min_of(face_angles_deg); }
double TetQuality::max_face_angle() const { return max_of(face_angles_deg); }
double TetQuality::min_dihedral() const { return min_of(dihedral_angles_deg); }
double TetQuality::max_dihedral() const { return max_of(dihedral_angles_deg); }

double signed_volume(const Tetra& t) {
  return dot(t[1] - t[0], cross(t[2] - t[0], t[3] - t[0])) / 6.0;
}

double longest_edge(const Tetra& t) {
  double l = 0.0;
  for (auto [i, j] : kTetEdges) l = std::max(l, distance(t[i], t[j]));
  return l;
}

double shortest_edge(const Tetra& t) {
  double l = distance(t[0], t[1]);
  for (auto [i, j] : kTetEdges) l = std::min(l, distance(t[i], t[j]));
  return l;
}

Circumsphere circumsphere_tet(const Tetra& t) {
  // Perpendicular-bisector system relative to p0:
  //   2 (p_i - p0) . x = |p_i - p0|^2,  i = 1..3
  const Vec3 a = t[1] - t[0];
  const Vec3 b = t[2] - t[0];
  const Vec3 c = t[3] - t[0];
  const Vec3 bc = cross(b, c);
  const Vec3 ca = cross(c, a);
  const Vec3 ab = cross(a, b);
  const double det = dot(a, bc);
  const double lmax = longest_edge(t);
  if (!(std::abs(det) >= kDegeneracyTol * lmax * lmax * lmax) || lmax == 0.0) {
    throw Error(ErrorCode::DegenerateSimplex, "circumsphere_tet: tetrahedron is degenerate");
  }
  const Vec3 x = (norm2(a) * bc + norm2(b) * ca + norm2(c) * ab) / (2.0 * det);
  return {t[0] + x, norm(x)};
}

Circumsphere circumcircle_tri(const Triangle& t) {
  const Vec3 a = t[1] - t[0];
  const Vec3 b = t[2] - t[0];
  const Vec3 n = cross(a, b);
  const double lmax = std::max({norm(a), norm(b), distance(t[1], t[2])});
  const double n2 = norm2(n);
  if (!(std::sqrt(n2) >= kDegeneracyTol * lmax * lmax) || lmax == 0.0) {
    throw Error(ErrorCode::DegenerateSimplex, "circumcircle_tri: triangle is degenerate");
  }
  const Vec3 x = (norm2(a) * cross(b, n) + norm2(b) * cross(n, a)) / (2.0 * n2);
  return {t[0] + x, norm(x)};
}

namespace {

// Signed distance of q above the plane of facet i, positive toward vertex i.
double height_above_facet(const Tetra& t, int i, const Point3& q) {
  const Triangle f = t.facet(i);
  Vec3 n = cross(f[1] - f[0], f[2] - f[0]);
  n = n / norm(n);
  if (dot(t[i] - f[0], n) < 0.0) n = -n;
  return dot(q - f[0], n);
}

}  // namespace

double signed_facet_height(const Tetra& t, int facet_index) {
  if (facet_index < 0 || facet_index > 3) {
    throw Error(ErrorCode::IndexOutOfRange, "signed_facet_height: facet index must be 0..3");
  }
  const Circumsphere s = circumsphere_tet(t);
  return height_above_facet(t, facet_index, s.center);
}

double angle_deg(const Point3& at, const Point3& b, const Point3& c) {
  const Vec3 u = b - at;
  const Vec3 v = c - at;
  return std::atan2(norm(cross(u, v)), dot(u, v)) * kRadToDeg;
}

double dihedral_deg(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  // Rotating the edge-orthogonal components of (c - a) and (d - a) by 90
  // degrees about the edge leaves the angle between them unchanged.
  const Vec3 e = b - a;
  const Vec3 u = cross(e, c - a);
  const Vec3 v = cross(e, d - a);
  return std::atan2(norm(cross(u, v)), dot(u, v)) * kRadToDeg;
}

TetQuality tet_quality(const Tetra& t) {
  const Circumsphere s = circumsphere_tet(t);
  TetQuality q;
  for (int i = 0; i < 4; ++i) {
    q.h_over_r[i] = height_above_facet(t, i, s.center) / s.radius;
    const Triangle f = t.facet(i);
    for (int k = 0; k < 3; ++k) {
      q.face_angles_deg[3 * i + k] = angle_deg(f[k], f[(k + 1) % 3], f[(k + 2) % 3]);
    }
  }
  for (int e = 0; e < 6; ++e) {
    const auto [i, j] = kTetEdges[e];
    const auto [k, l] = kTetEdges[5 - e];  // the opposite edge
    q.dihedral_angles_deg[e] = dihedral_deg(t[i], t[j], t[k], t[l]);
  }
  q.r_over_l = s.radius / shortest_edge(t);
  return q;
}

WcClass classify(const TetQuality& q) {
  WcClass c;
  c.is_3wc = q.min_h_over_r() > 0.0;
  c.is_2wc = q.max_face_angle() < 90.0;
  c.is_dihedral_acute = q.max_dihedral() < 90.0;
  return c;
}

WcClass classify(const Tetra& t) { return classify(tet_quality(t)); }

bool outside_equatorial_ball(const Triangle& facet, const Point3& v) {
  const Circumsphere s = circumcircle_tri(facet);
  return distance(v, s.center) > s.radius;
}

}  // namespace wct
