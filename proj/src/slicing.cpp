#include "isoperim/slicing.hpp"

#include <cmath>

namespace isoperim::slicing {

namespace {

geom::HalfPlane cut_plane(Point direction, double alpha) {
  const double n = geom::norm(direction);
  if (std::abs(n - 1.0) > kGeomEps) {
    throw RejectedInput("cut direction must be a unit vector");
  }
  return geom::HalfPlane{direction, alpha};
}

}  // namespace

double volume_cut(const Polygon& f, Point direction, double alpha) {
  const auto clipped = geom::clip_halfplane(f, cut_plane(direction, alpha));
  return clipped ? geom::signed_area(*clipped) : 0.0;
}

SliceResult slice_to_area(const Polygon& f, Point direction,
                          double target_area) {
  const double full = geom::polygon_area(f);
  cut_plane(direction, 0.0);  // validates direction
  if (!(target_area > 0.0) || !(target_area < full)) {
    throw RejectedInput("target area must lie strictly inside (0, area(F))");
  }
  const double tol = 1e-10 * full;

  // support interval of F along the cut direction brackets the root
  double lo = -geom::polygon_support(f, {-direction.x, -direction.y});
  double hi = geom::polygon_support(f, direction);

  double alpha = 0.5 * (lo + hi);
  double area = volume_cut(f, direction, alpha);
  int it = 0;
  for (; it < 200 && std::abs(area - target_area) > tol; ++it) {
    if (area > target_area) {
      lo = alpha;
    } else {
      hi = alpha;
    }
    alpha = 0.5 * (lo + hi);
    area = volume_cut(f, direction, alpha);
  }
  if (std::abs(area - target_area) > tol) {
    throw NumericalFailure("slice bisection did not converge");
  }

  SliceResult out;
  out.alpha0 = alpha;
  const auto clipped = geom::clip_halfplane(f, cut_plane(direction, alpha));
  if (!clipped) throw NumericalFailure("slice produced an empty polygon");
  out.clipped = *clipped;
  out.area_achieved = area;
  out.perim_before = geom::polygon_perimeter(f);
  out.perim_after = geom::polygon_perimeter(out.clipped);
  return out;
}

DecreaseCheck strict_decrease_check(const Polygon& f, Point direction,
                                    double target_area) {
  DecreaseCheck out;
  out.slice = slice_to_area(f, direction, target_area);
  out.margin = out.slice.perim_before - out.slice.perim_after;
  out.strict = out.margin > 0.0;
  return out;
}

}  // namespace isoperim::slicing
