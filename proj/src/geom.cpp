#include "isoperim/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isoperim::geom {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Proper or touching intersection of segments ab and cd, excluding shared
// endpoints of adjacent edges (handled by the caller).
bool segments_intersect(Point a, Point b, Point c, Point d) {
  const double o1 = cross(b - a, c - a);
  const double o2 = cross(b - a, d - a);
  const double o3 = cross(d - c, a - c);
  const double o4 = cross(d - c, b - c);
  if (((o1 > kGeomEps && o2 < -kGeomEps) || (o1 < -kGeomEps && o2 > kGeomEps)) &&
      ((o3 > kGeomEps && o4 < -kGeomEps) || (o3 < -kGeomEps && o4 > kGeomEps))) {
    return true;
  }
  auto on_segment = [](Point s, Point e, Point q) {
    return std::abs(cross(e - s, q - s)) <= kGeomEps &&
           dot(q - s, e - s) >= -kGeomEps && dot(q - e, s - e) >= -kGeomEps;
  };
  if (std::abs(o1) <= kGeomEps && on_segment(a, b, c)) return true;
  if (std::abs(o2) <= kGeomEps && on_segment(a, b, d)) return true;
  if (std::abs(o3) <= kGeomEps && on_segment(c, d, a)) return true;
  if (std::abs(o4) <= kGeomEps && on_segment(c, d, b)) return true;
  return false;
}

}  // namespace

HalfPlane make_halfplane(Point normal, double offset) {
  const double n = norm(normal);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kGeomEps) {
    throw RejectedInput("half-plane normal must be a unit vector");
  }
  return HalfPlane{normal, offset};
}

double signed_area(const Polygon& p) {
  double a = 0.0;
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    a += cross(p.vertices[i], p.vertices[(i + 1) % n]);
  }
  return 0.5 * a;
}

void validate_polygon(const Polygon& p, bool check_simple) {
  if (p.vertices.size() < 3) {
    throw RejectedInput("polygon needs at least 3 vertices");
  }
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    if (!finite(p.vertices[i])) {
      throw RejectedInput("polygon has non-finite vertex");
    }
    if (dist(p.vertices[i], p.vertices[(i + 1) % n]) <= kGeomEps) {
      throw RejectedInput("polygon has coincident consecutive vertices");
    }
  }
  if (signed_area(p) <= 0.0) {
    throw RejectedInput("polygon must be counterclockwise with positive area");
  }
  if (check_simple && !polygon_is_simple(p)) {
    throw RejectedInput("polygon is self-intersecting");
  }
}

bool polygon_is_simple(const Polygon& p) {
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Point a = p.vertices[i];
    const Point b = p.vertices[(i + 1) % n];
    for (size_t j = i + 1; j < n; ++j) {
      // skip adjacent edges (they share an endpoint)
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(a, b, p.vertices[j], p.vertices[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

bool polygon_is_convex(const Polygon& p, double eps) {
  const size_t n = p.vertices.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Point a = p.vertices[i];
    const Point b = p.vertices[(i + 1) % n];
    const Point c = p.vertices[(i + 2) % n];
    if (cross(b - a, c - b) < -eps) return false;
  }
  return true;
}

double polygon_area(const Polygon& p) {
  validate_polygon(p);
  return signed_area(p);
}

double polygon_perimeter(const Polygon& p) {
  validate_polygon(p);
  double len = 0.0;
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    len += dist(p.vertices[i], p.vertices[(i + 1) % n]);
  }
  return len;
}

double diameter(const Polygon& p) {
  validate_polygon(p);
  double best = 0.0;
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      best = std::max(best, dist(p.vertices[i], p.vertices[j]));
    }
  }
  return best;
}

std::optional<Polygon> clip_halfplane(const Polygon& p, const HalfPlane& h) {
  validate_polygon(p);
  const size_t n = p.vertices.size();
  std::vector<Point> out;
  out.reserve(n + 2);
  auto side = [&h](Point q) { return dot(h.normal, q) - h.offset; };
  for (size_t i = 0; i < n; ++i) {
    const Point s = p.vertices[i];
    const Point e = p.vertices[(i + 1) % n];
    const double ds = side(s);
    const double de = side(e);
    const bool sin_ = ds >= -kGeomEps;
    const bool ein = de >= -kGeomEps;
    if (sin_) out.push_back(s);
    if (sin_ != ein) {
      const double t = ds / (ds - de);
      out.push_back(s + t * (e - s));
    }
  }
  if (out.size() < 3) return std::nullopt;

  // drop coincident consecutive vertices introduced at the cut
  std::vector<Point> clean;
  clean.reserve(out.size());
  for (const Point& q : out) {
    if (clean.empty() || dist(clean.back(), q) > kGeomEps) clean.push_back(q);
  }
  while (clean.size() > 1 && dist(clean.front(), clean.back()) <= kGeomEps) {
    clean.pop_back();
  }
  // collapse runs of collinear points lying on the cut line to their endpoints
  if (clean.size() > 3) {
    std::vector<Point> final_pts;
    final_pts.reserve(clean.size());
    const size_t m = clean.size();
    auto on_line = [&](Point q) { return std::abs(side(q)) <= kGeomEps; };
    for (size_t i = 0; i < m; ++i) {
      const Point prev = clean[(i + m - 1) % m];
      const Point cur = clean[i];
      const Point next = clean[(i + 1) % m];
      if (on_line(prev) && on_line(cur) && on_line(next)) continue;
      final_pts.push_back(cur);
    }
    clean.swap(final_pts);
  }
  if (clean.size() < 3) return std::nullopt;
  Polygon result{std::move(clean)};
  if (signed_area(result) <= 0.0) return std::nullopt;
  return result;
}

Polygon convex_hull(std::vector<Point> pts) {
  if (pts.size() < 3) throw RejectedInput("convex hull needs at least 3 points");
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point a, Point b) { return dist(a, b) <= kGeomEps; }),
            pts.end());
  const size_t n = pts.size();
  if (n < 3) throw RejectedInput("convex hull input is degenerate");
  std::vector<Point> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= kGeomEps) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
    while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= kGeomEps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw RejectedInput("all points are collinear");
  return Polygon{std::move(hull)};
}

double polygon_support(const Polygon& p, Point u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& v : p.vertices) best = std::max(best, dot(v, u));
  return best;
}

std::vector<HalfPlane> edge_halfplanes(const Polygon& p) {
  std::vector<HalfPlane> hps;
  const size_t n = p.vertices.size();
  hps.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Point a = p.vertices[i];
    const Point b = p.vertices[(i + 1) % n];
    Point nrm = rot90(b - a);  // inward for CCW
    const double len = norm(nrm);
    if (len <= kGeomEps) continue;
    nrm = (1.0 / len) * nrm;
    hps.push_back(HalfPlane{nrm, dot(nrm, a)});
  }
  return hps;
}

double convex_outside_residual(const Polygon& p, Point q) {
  double worst = 0.0;
  for (const HalfPlane& h : edge_halfplanes(p)) {
    worst = std::max(worst, h.offset - dot(h.normal, q));
  }
  return worst;
}

Point closest_point_on_convex(const Polygon& p, Point q) {
  if (convex_outside_residual(p, q) <= 0.0) return q;
  double best_d = std::numeric_limits<double>::infinity();
  Point best = q;
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Point a = p.vertices[i];
    const Point b = p.vertices[(i + 1) % n];
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point c = a + t * ab;
    const double d = dist(q, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

double distance_to_convex(const Polygon& p, Point q) {
  if (convex_outside_residual(p, q) <= 0.0) return 0.0;
  return dist(q, closest_point_on_convex(p, q));
}

BoundarySplit split_boundary(const Polygon& p, Point dir, double alpha) {
  validate_polygon(p);
  BoundarySplit out;
  const size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Point a = p.vertices[i];
    Point b = p.vertices[(i + 1) % n];
    double da = dot(a, dir) - alpha;
    double db = dot(b, dir) - alpha;
    const double len = dist(a, b);
    if (std::abs(da) <= kGeomEps && std::abs(db) <= kGeomEps) {
      out.on += len;
    } else if (da >= -kGeomEps && db >= -kGeomEps) {
      out.above += len;
    } else if (da <= kGeomEps && db <= kGeomEps) {
      out.below += len;
    } else {
      // edge crosses the line: split at the crossing point
      const double t = da / (da - db);
      out.above += (da > 0 ? t : 1.0 - t) * len;
      out.below += (da > 0 ? 1.0 - t : t) * len;
    }
  }
  return out;
}

}  // namespace isoperim::geom
