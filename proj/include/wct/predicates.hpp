#pragma once

#include "wct/vec3.hpp"

// Exact-sign geometric predicates. Each predicate is evaluated in double
// precision with a static error bound; when the bound cannot certify the
// sign, it is recomputed exactly in rational arithmetic. Results are -1, 0
// or +1 and are exact for the double-precision inputs.

namespace wct::predicates {

/// Sign of det[b - a, c - a, d - a]: positive when signed_volume(a,b,c,d) > 0.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

/// Positive when e lies strictly inside the sphere through a, b, c, d and
/// orient3d(a, b, c, d) > 0. The sign flips with the orientation of a..d.
int insphere(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
             const Point3& e);

/// Orientation of three coplanar points within their common plane. The sign
/// is consistent across every triple of one plane, not tied to a global axis.
/// Zero iff the points are collinear.
int orient_coplanar(const Point3& a, const Point3& b, const Point3& c);

/// For d coplanar with the non-collinear triangle abc: positive when d lies
/// strictly inside the circumcircle of abc, zero on it, negative outside.
int incircle_coplanar(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

}  // namespace wct::predicates
