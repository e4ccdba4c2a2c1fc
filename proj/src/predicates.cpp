#include "wct/predicates.hpp"

#include <gmpxx.h>

#include <cmath>

namespace wct::predicates {

namespace {

constexpr double kEps = 0x1p-53;
// First-stage error bounds (Shewchuk), doubled for margin.
constexpr double kOrient2dBound = 2.0 * (3.0 + 16.0 * kEps) * kEps;
constexpr double kOrient3dBound = 2.0 * (7.0 + 56.0 * kEps) * kEps;
constexpr double kInsphereBound = 2.0 * (16.0 + 224.0 * kEps) * kEps;

template <class T>
int sign_of(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

struct Q3 {
  mpq_class x, y, z;
};

Q3 exact(const Point3& p) { return {mpq_class(p.x), mpq_class(p.y), mpq_class(p.z)}; }

// det[a - d, b - d, c - d]; the negation of orient3d's sign convention.
template <class P, class T>
T orient3d_raw(const P& a, const P& b, const P& c, const P& d) {
  const T adx = a.x - d.x, bdx = b.x - d.x, cdx = c.x - d.x;
  const T ady = a.y - d.y, bdy = b.y - d.y, cdy = c.y - d.y;
  const T adz = a.z - d.z, bdz = b.z - d.z, cdz = c.z - d.z;
  return adz * (bdx * cdy - cdx * bdy) + bdz * (cdx * ady - adx * cdy) +
         cdz * (adx * bdy - bdx * ady);
}

template <class P, class T>
T insphere_raw(const P& a, const P& b, const P& c, const P& d, const P& e) {
  const T aex = a.x - e.x, bex = b.x - e.x, cex = c.x - e.x, dex = d.x - e.x;
  const T aey = a.y - e.y, bey = b.y - e.y, cey = c.y - e.y, dey = d.y - e.y;
  const T aez = a.z - e.z, bez = b.z - e.z, cez = c.z - e.z, dez = d.z - e.z;
  const T ab = aex * bey - bex * aey;
  const T bc = bex * cey - cex * bey;
  const T cd = cex * dey - dex * cey;
  const T da = dex * aey - aex * dey;
  const T ac = aex * cey - cex * aey;
  const T bd = bex * dey - dex * bey;
  const T abc = aez * bc - bez * ac + cez * ab;
  const T bcd = bez * cd - cez * bd + dez * bc;
  const T cda = cez * da + dez * ac + aez * cd;
  const T dab = dez * ab + aez * bd + bez * da;
  const T alift = aex * aex + aey * aey + aez * aez;
  const T blift = bex * bex + bey * bey + bez * bez;
  const T clift = cex * cex + cey * cey + cez * cez;
  const T dlift = dex * dex + dey * dey + dez * dez;
  return (dlift * abc - clift * dab) + (blift * cda - alift * bcd);
}

double insphere_permanent(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
                          const Point3& e) {
  const double aex = a.x - e.x, bex = b.x - e.x, cex = c.x - e.x, dex = d.x - e.x;
  const double aey = a.y - e.y, bey = b.y - e.y, cey = c.y - e.y, dey = d.y - e.y;
  const double aez = std::abs(a.z - e.z), bez = std::abs(b.z - e.z);
  const double cez = std::abs(c.z - e.z), dez = std::abs(d.z - e.z);
  const double alift = aex * aex + aey * aey + aez * aez;
  const double blift = bex * bex + bey * bey + bez * bez;
  const double clift = cex * cex + cey * cey + cez * cez;
  const double dlift = dex * dex + dey * dey + dez * dez;
  const double aexbey = std::abs(aex * bey), bexaey = std::abs(bex * aey);
  const double bexcey = std::abs(bex * cey), cexbey = std::abs(cex * bey);
  const double cexdey = std::abs(cex * dey), dexcey = std::abs(dex * cey);
  const double dexaey = std::abs(dex * aey), aexdey = std::abs(aex * dey);
  const double aexcey = std::abs(aex * cey), cexaey = std::abs(cex * aey);
  const double bexdey = std::abs(bex * dey), dexbey = std::abs(dex * bey);
  return ((cexdey + dexcey) * bez + (dexbey + bexdey) * cez + (bexcey + cexbey) * dez) * alift +
         ((dexaey + aexdey) * cez + (aexcey + cexaey) * dez + (cexdey + dexcey) * aez) * blift +
         ((aexbey + bexaey) * dez + (bexdey + dexbey) * aez + (dexaey + aexdey) * bez) * clift +
         ((bexcey + cexbey) * aez + (cexaey + aexcey) * bez + (aexbey + bexaey) * cez) * dlift;
}

// 2D orientation of the projections onto the coordinate plane (u, v).
int orient2d(const Point3& a, const Point3& b, const Point3& c, int u, int v) {
  const double left = (a[u] - c[u]) * (b[v] - c[v]);
  const double right = (a[v] - c[v]) * (b[u] - c[u]);
  const double det = left - right;
  const double bound = kOrient2dBound * (std::abs(left) + std::abs(right));
  if (det > bound || -det > bound) return sign_of(det);
  const mpq_class au(a[u]), av(a[v]), bu(b[u]), bv(b[v]), cu(c[u]), cv(c[v]);
  const mpq_class exact_det = (au - cu) * (bv - cv) - (av - cv) * (bu - cu);
  return sign_of(exact_det);
}

}  // namespace

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const double adx = a.x - d.x, bdx = b.x - d.x, cdx = c.x - d.x;
  const double ady = a.y - d.y, bdy = b.y - d.y, cdy = c.y - d.y;
  const double adz = a.z - d.z, bdz = b.z - d.z, cdz = c.z - d.z;
  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double det = adz * (bdxcdy - cdxbdy) + bdz * (cdxady - adxcdy) + cdz * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * std::abs(adz) +
                           (std::abs(cdxady) + std::abs(adxcdy)) * std::abs(bdz) +
                           (std::abs(adxbdy) + std::abs(bdxady)) * std::abs(cdz);
  const double bound = kOrient3dBound * permanent;
  if (det > bound || -det > bound) return -sign_of(det);
  return -sign_of(orient3d_raw<Q3, mpq_class>(exact(a), exact(b), exact(c), exact(d)));
}

int insphere(const Point3& a, const Point3& b, const Point3& c, const Point3& d,
             const Point3& e) {
  const double det = insphere_raw<Point3, double>(a, b, c, d, e);
  const double bound = kInsphereBound * insphere_permanent(a, b, c, d, e);
  if (det > bound || -det > bound) return -sign_of(det);
  return -sign_of(
      insphere_raw<Q3, mpq_class>(exact(a), exact(b), exact(c), exact(d), exact(e)));
}

int orient_coplanar(const Point3& a, const Point3& b, const Point3& c) {
  if (int o = orient2d(a, b, c, 0, 1); o != 0) return o;
  if (int o = orient2d(a, b, c, 1, 2); o != 0) return o;
  return orient2d(a, b, c, 0, 2);
}

int incircle_coplanar(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  // Any sphere through a, b, c cuts their plane in the circumcircle, so the
  // in-plane test equals an insphere test against a lifted fourth point
  // s = a + (b - a) x (c - a), for which orient3d(a, b, c, s) > 0.
  const Q3 qa = exact(a), qb = exact(b), qc = exact(c), qd = exact(d);
  const mpq_class ux = qb.x - qa.x, uy = qb.y - qa.y, uz = qb.z - qa.z;
  const mpq_class vx = qc.x - qa.x, vy = qc.y - qa.y, vz = qc.z - qa.z;
  const Q3 qs{qa.x + (uy * vz - uz * vy), qa.y + (uz * vx - ux * vz),
              qa.z + (ux * vy - uy * vx)};
  return -sign_of(insphere_raw<Q3, mpq_class>(qa, qb, qc, qs, qd));
}

}  // namespace wct::predicates
