#include <doctest.h>

#include <cmath>
#include <random>

#include "wct/geometry.hpp"
#include "wct/predicates.hpp"

using namespace wct;
namespace pred = wct::predicates;

TEST_CASE("orient3d sign agrees with signed volume") {
  const Point3 a{0, 0, 0}, b{1, 0, 0}, c{0, 1, 0}, d{0, 0, 1};
  CHECK(pred::orient3d(a, b, c, d) == 1);
  CHECK(pred::orient3d(a, c, b, d) == -1);
  CHECK(pred::orient3d(a, b, c, {0.3, 0.7, 0}) == 0);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n = 0; n < 1000; ++n) {
    const Point3 p{u(rng), u(rng), u(rng)}, q{u(rng), u(rng), u(rng)}, r{u(rng), u(rng), u(rng)},
        s{u(rng), u(rng), u(rng)};
    const double v = signed_volume(Tetra{{p, q, r, s}});
    if (std::abs(v) > 1e-9) CHECK(pred::orient3d(p, q, r, s) == (v > 0 ? 1 : -1));
  }
}

TEST_CASE("orient3d is exact on nearly coplanar input") {
  // Points on the plane x + y + z = 1 with coordinates that are exact in
  // binary, then a perturbation of one ulp off the plane.
  const Point3 a{0.5, 0.25, 0.25}, b{0.125, 0.5, 0.375}, c{0.75, 0.125, 0.125};
  const Point3 on{0.25, 0.25, 0.5};
  CHECK(pred::orient3d(a, b, c, on) == 0);
  const Point3 above{0.25, 0.25, std::nextafter(0.5, 1.0)};
  const Point3 below{0.25, 0.25, std::nextafter(0.5, 0.0)};
  CHECK(pred::orient3d(a, b, c, above) == -pred::orient3d(a, b, c, below));
  CHECK(pred::orient3d(a, b, c, above) != 0);
}

TEST_CASE("insphere") {
  const Point3 a{1, 0, 0}, b{0, 1, 0}, c{-1, 0, 0}, d{0, 0, 1};
  REQUIRE(pred::orient3d(a, b, c, d) == 1);
  CHECK(pred::insphere(a, b, c, d, {0, 0, 0}) == 1);
  CHECK(pred::insphere(a, b, c, d, {2, 0, 0}) == -1);
  CHECK(pred::insphere(a, b, c, d, {0, -1, 0}) == 0);  // on the unit sphere
  CHECK(pred::insphere(a, c, b, d, {0, 0, 0}) == -1);  // sign flips with orientation
  // Just inside and just outside the sphere along an axis.
  CHECK(pred::insphere(a, b, c, d, {0, 0, std::nextafter(-1.0, 0.0)}) == 1);
  CHECK(pred::insphere(a, b, c, d, {0, 0, std::nextafter(-1.0, -2.0)}) == -1);
}

TEST_CASE("coplanar orientation and incircle") {
  // Right triangle at a in the tilted plane z = x + y.
  const Point3 a{0, 0, 0}, b{1, 0, 1}, c{1, -2, -1};
  const int o = pred::orient_coplanar(a, b, c);
  CHECK(o != 0);
  CHECK(pred::orient_coplanar(a, c, b) == -o);
  CHECK(pred::orient_coplanar(a, b, {2, 0, 2}) == 0);

  // Circumcircle of a right triangle has the hypotenuse as diameter.
  const Point3 mid = 0.5 * (b + c);
  CHECK(pred::incircle_coplanar(a, b, c, mid) == 1);
  CHECK(pred::incircle_coplanar(a, b, c, b + c - a) == 0);  // fourth rectangle corner
  CHECK(pred::incircle_coplanar(a, b, c, 2.0 * (b + c)) == -1);
  CHECK(pred::incircle_coplanar(b, a, c, mid) == 1);  // independent of orientation

  // Axis-aligned plane: every projection but one is degenerate.
  const Point3 p{0, 0, 5}, q{1, 0, 5}, r{0, 1, 5};
  CHECK(pred::orient_coplanar(p, q, r) == -pred::orient_coplanar(p, r, q));
  CHECK(pred::incircle_coplanar(p, q, r, {1, 1, 5}) == 0);
  CHECK(pred::incircle_coplanar(p, q, r, {0.5, 0.5, 5}) == 1);
}
