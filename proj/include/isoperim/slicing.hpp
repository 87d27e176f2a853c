#pragma once

#include "isoperim/geom.hpp"

namespace isoperim::slicing {

using geom::Point;
using geom::Polygon;

// Outcome of cutting F with the half-plane {x . direction >= alpha0} chosen so
// the retained area hits a target.
struct SliceResult {
  double alpha0 = 0.0;
  Polygon clipped;
  double area_achieved = 0.0;
  double perim_before = 0.0;
  double perim_after = 0.0;
};

struct DecreaseCheck {
  bool strict = false;   // margin > 0
  double margin = 0.0;   // perim_before - perim_after
  SliceResult slice;
};

// Area of F cut down to {x . direction >= alpha}; 0 once the line passes the
// far side.
double volume_cut(const Polygon& f, Point direction, double alpha);

// Bisection on alpha (the cut area is monotone nonincreasing in alpha) until
// |area - target| <= 1e-10 * area(F). Target must lie strictly inside
// (0, area(F)).
SliceResult slice_to_area(const Polygon& f, Point direction, double target_area);

// Slices to the target area and reports the perimeter drop, which is strictly
// positive whenever a nontrivial cap is removed: the boundary below the cut
// line is replaced by the shorter chord.
DecreaseCheck strict_decrease_check(const Polygon& f, Point direction,
                                    double target_area);

}  // namespace isoperim::slicing
