#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoperim/geom.hpp"

namespace isoperim::region {

using geom::HalfPlane;
using geom::Point;
using geom::Polygon;

enum class Kind { convex_polygon, halfplane_intersection, stripe, cusp };

// The subregion G: convex polygon, intersection of half-planes, the stripe
// R x [0, w], or the built-in cusp {-1 < x < 1, y >= x^2/(1-x^2)}.
struct Region {
  Kind kind = Kind::convex_polygon;
  Polygon poly;                       // convex_polygon
  std::vector<HalfPlane> halfplanes;  // halfplane_intersection
  double stripe_width = 0.0;          // stripe
};

struct Incircle {
  Point center;
  double radius = 0.0;
  bool attained = false;
  bool center_unique = true;  // false when every translate along a line works
};

struct InradiusResult {
  bool unbounded = false;  // disks of arbitrary radius fit (e.g. a wedge)
  Incircle incircle;       // valid when !unbounded
};

Region make_convex_polygon(Polygon p);
Region make_halfplane_intersection(std::vector<HalfPlane> hps);
Region make_stripe(double width);
Region make_cusp();

bool is_bounded(const Region& g);

// Chebyshev-center LP for the convex kinds; fixed analytic answers for the
// stripe (w/2, attained, center on x = 0) and the cusp (1, not attained).
InradiusResult inradius(const Region& g);

// G_k = closure(G) intersected with the square [-k,k]^2 (optionally recentered
// at `center`). The cusp truncation samples the boundary curve at >= 64k
// points. Result is always a bounded convex_polygon region.
Region truncate(const Region& g, int k);
Region truncate_centered(const Region& g, int k, Point center);

// h_G(theta) = sup over G of (x,y) . (cos theta, sin theta); +infinity in
// unbounded directions. Rejects the cusp (handled only via truncation).
double support_value(const Region& g, double theta);

// Perimeter of the (truncated) region polygon; k matters only for unbounded
// kinds.
double region_perimeter(const Region& g, int k);

// Bounded polygon realization; truncates unbounded kinds at k.
Polygon region_polygon(const Region& g, int k);

double region_area(const Region& g, int k);

// y = x^2 / (1 - x^2), the cusp boundary curve.
double cusp_curve(double x);
// positive x where the curve reaches height y.
double cusp_curve_inverse(double y);

}  // namespace isoperim::region
