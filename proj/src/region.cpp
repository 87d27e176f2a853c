#include "isoperim/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoperim/lp.hpp"

namespace isoperim::region {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<HalfPlane> stripe_halfplanes(double w) {
  return {HalfPlane{{0.0, 1.0}, 0.0}, HalfPlane{{0.0, -1.0}, -w}};
}

std::vector<HalfPlane> effective_halfplanes(const Region& g) {
  switch (g.kind) {
    case Kind::convex_polygon:
      return geom::edge_halfplanes(g.poly);
    case Kind::halfplane_intersection:
      return g.halfplanes;
    case Kind::stripe:
      return stripe_halfplanes(g.stripe_width);
    case Kind::cusp:
      throw UnsupportedOperation("cusp region has no half-plane form");
  }
  throw RejectedInput("unknown region kind");
}

Polygon intersect_halfplanes_with_box(const std::vector<HalfPlane>& hps,
                                      Point lo, Point hi) {
  Polygon box{{{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}}};
  std::optional<Polygon> cur = box;
  for (const HalfPlane& h : hps) {
    cur = geom::clip_halfplane(*cur, h);
    if (!cur) throw InfeasibleRegion("region truncation is empty");
  }
  if (geom::signed_area(*cur) <= 1e-12) {
    throw InfeasibleRegion("region truncation has empty interior");
  }
  return *cur;
}

// maximize u . p over the half-plane intersection; +inf when unbounded.
double support_lp(const std::vector<HalfPlane>& hps, Point u) {
  std::vector<lp::Constraint> cons;
  cons.reserve(hps.size());
  for (const HalfPlane& h : hps) {
    cons.push_back({{-h.normal.x, -h.normal.y, 0.0}, -h.offset});
  }
  const lp::Result r = lp::maximize(cons, {u.x, u.y, 0.0}, 2);
  if (r.status == lp::Status::infeasible) {
    throw InfeasibleRegion("region is empty");
  }
  if (r.status == lp::Status::unbounded) return kInf;
  return r.value;
}

// Chebyshev center: maximize r subject to  n_i . x - r >= c_i.
InradiusResult chebyshev(const std::vector<HalfPlane>& hps) {
  std::vector<lp::Constraint> cons;
  cons.reserve(hps.size() + 1);
  for (const HalfPlane& h : hps) {
    cons.push_back({{-h.normal.x, -h.normal.y, 1.0}, -h.offset});
  }
  lp::Result r = lp::maximize(cons, {0.0, 0.0, 1.0}, 3);
  if (r.status == lp::Status::infeasible) {
    throw InfeasibleRegion("region is empty");
  }
  if (r.status == lp::Status::unbounded) return InradiusResult{true, {}};
  if (r.x[2] <= kGeomEps) {
    throw InfeasibleRegion("region is degenerate (empty interior)");
  }

  InradiusResult out;
  out.unbounded = false;
  out.incircle.radius = r.x[2];
  out.incircle.attained = true;
  out.incircle.center = {r.x[0], r.x[1]};
  if (r.status == lp::Status::optimal) return out;

  // The optimal radius is attained on a whole line of centers (stripe-like
  // region). Pin the radius and pick the center with extreme coordinates
  // clamped toward 0, which also reproduces the stripe tie-break.
  out.incircle.center_unique = false;
  const double r_fix = r.x[2] * (1.0 - 1e-12) - 1e-13;
  std::vector<lp::Constraint> pinned = cons;
  pinned.push_back({{0.0, 0.0, -1.0}, -r_fix});
  auto coord_range = [&](int axis, const std::vector<lp::Constraint>& base) {
    std::array<double, 3> c{0, 0, 0};
    c[axis] = 1.0;
    const lp::Result hi = lp::maximize(base, c, 3);
    c[axis] = -1.0;
    const lp::Result lo = lp::maximize(base, c, 3);
    return std::pair<double, double>(-lo.value, hi.value);
  };
  auto [xlo, xhi] = coord_range(0, pinned);
  const double cx = std::clamp(0.0, xlo, xhi);
  pinned.push_back({{1.0, 0.0, 0.0}, cx + 1e-12});
  pinned.push_back({{-1.0, 0.0, 0.0}, -cx + 1e-12});
  auto [ylo, yhi] = coord_range(1, pinned);
  out.incircle.center = {cx, std::clamp(0.0, ylo, yhi)};
  return out;
}

}  // namespace

double cusp_curve(double x) { return x * x / (1.0 - x * x); }

double cusp_curve_inverse(double y) { return std::sqrt(y / (1.0 + y)); }

Region make_convex_polygon(Polygon p) {
  geom::validate_polygon(p, true);
  if (!geom::polygon_is_convex(p)) {
    throw RejectedInput("region polygon must be convex");
  }
  Region g;
  g.kind = Kind::convex_polygon;
  g.poly = std::move(p);
  return g;
}

Region make_halfplane_intersection(std::vector<HalfPlane> hps) {
  if (hps.empty()) throw RejectedInput("need at least one half-plane");
  for (const HalfPlane& h : hps) {
    if (std::abs(geom::norm(h.normal) - 1.0) > kGeomEps) {
      throw RejectedInput("half-plane normal must be a unit vector");
    }
  }
  Region g;
  g.kind = Kind::halfplane_intersection;
  g.halfplanes = std::move(hps);
  // must have nonempty interior
  chebyshev(g.halfplanes);
  return g;
}

Region make_stripe(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw RejectedInput("stripe width must be positive");
  }
  Region g;
  g.kind = Kind::stripe;
  g.stripe_width = width;
  return g;
}

Region make_cusp() {
  Region g;
  g.kind = Kind::cusp;
  return g;
}

bool is_bounded(const Region& g) {
  switch (g.kind) {
    case Kind::convex_polygon:
      return true;
    case Kind::stripe:
    case Kind::cusp:
      return false;
    case Kind::halfplane_intersection: {
      const Point dirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (Point d : dirs) {
        if (!std::isfinite(support_lp(g.halfplanes, d))) return false;
      }
      return true;
    }
  }
  return false;
}

InradiusResult inradius(const Region& g) {
  switch (g.kind) {
    case Kind::stripe: {
      InradiusResult out;
      out.incircle.center = {0.0, g.stripe_width / 2.0};
      out.incircle.radius = g.stripe_width / 2.0;
      out.incircle.attained = true;
      out.incircle.center_unique = false;
      return out;
    }
    case Kind::cusp: {
      // Example region: disks of radius r < 1 fit arbitrarily high up, but no
      // unit disk fits; the supremum 1 is not attained.
      InradiusResult out;
      out.incircle.center = {0.0, 0.0};
      out.incircle.radius = 1.0;
      out.incircle.attained = false;
      return out;
    }
    default:
      return chebyshev(effective_halfplanes(g));
  }
}

Region truncate_centered(const Region& g, int k, Point center) {
  if (k < 1) throw RejectedInput("truncation index k must be >= 1");
  const Point lo{center.x - k, center.y - k};
  const Point hi{center.x + k, center.y + k};

  if (g.kind == Kind::cusp) {
    // sample y = x^2/(1-x^2) between its intersections with the box top
    const double top = hi.y;
    if (top <= 0.0 || lo.x > 0.0 || hi.x < 0.0) {
      throw InfeasibleRegion("cusp truncation is empty");
    }
    const double xr = std::min(cusp_curve_inverse(top), hi.x);
    const double xl = std::max(-cusp_curve_inverse(top), lo.x);
    const int samples = std::max(64 * k, 64);
    std::vector<Point> pts;
    pts.reserve(samples + 3);
    for (int i = 0; i <= samples; ++i) {
      const double x = xl + (xr - xl) * static_cast<double>(i) / samples;
      pts.push_back({x, std::min(cusp_curve(x), top)});
    }
    pts.push_back({xr, top});
    pts.push_back({xl, top});
    std::vector<Point> clean;
    for (const Point& p : pts) {
      if (clean.empty() || geom::dist(clean.back(), p) > kGeomEps) {
        clean.push_back(p);
      }
    }
    while (clean.size() > 1 &&
           geom::dist(clean.front(), clean.back()) <= kGeomEps) {
      clean.pop_back();
    }
    Polygon poly{std::move(clean)};
    geom::validate_polygon(poly);
    return make_convex_polygon(std::move(poly));
  }

  return make_convex_polygon(
      intersect_halfplanes_with_box(effective_halfplanes(g), lo, hi));
}

Region truncate(const Region& g, int k) {
  return truncate_centered(g, k, {0.0, 0.0});
}

double support_value(const Region& g, double theta) {
  const Point u{std::cos(theta), std::sin(theta)};
  switch (g.kind) {
    case Kind::convex_polygon:
      return geom::polygon_support(g.poly, u);
    case Kind::stripe: {
      if (std::abs(u.x) > kGeomEps) return kInf;
      return u.y > 0 ? g.stripe_width * u.y : 0.0;
    }
    case Kind::cusp:
      throw UnsupportedOperation(
          "support values of the cusp region are undefined; truncate first");
    case Kind::halfplane_intersection:
      return support_lp(g.halfplanes, u);
  }
  throw RejectedInput("unknown region kind");
}

Polygon region_polygon(const Region& g, int k) {
  if (g.kind == Kind::convex_polygon) return g.poly;
  return truncate(g, k).poly;
}

double region_perimeter(const Region& g, int k) {
  return geom::polygon_perimeter(region_polygon(g, k));
}

double region_area(const Region& g, int k) {
  return geom::polygon_area(region_polygon(g, k));
}

}  // namespace isoperim::region
