#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "isoperim/common.hpp"

namespace isoperim::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator*(Point p, double s) { return s * p; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point rot90(Point p) { return {-p.y, p.x}; }

// Simple closed polygon, vertices in counterclockwise order, last vertex
// implicitly connected to the first.
struct Polygon {
  std::vector<Point> vertices;
};

// Half-plane {(x,y) : a*x + b*y >= c} with unit normal (a,b) pointing into
// the kept side.
struct HalfPlane {
  Point normal;
  double offset = 0.0;
};

HalfPlane make_halfplane(Point normal, double offset);

// Cheap validity checks: vertex count, finiteness, consecutive duplicates,
// CCW orientation. `check_simple` adds the O(n^2) self-intersection scan;
// used at ingestion boundaries, skipped in hot loops.
void validate_polygon(const Polygon& p, bool check_simple = false);

bool polygon_is_simple(const Polygon& p);
bool polygon_is_convex(const Polygon& p, double eps = kGeomEps);

double signed_area(const Polygon& p);

// Shoelace area; rejects invalid polygons.
double polygon_area(const Polygon& p);

// Sum of edge lengths; rejects invalid polygons.
double polygon_perimeter(const Polygon& p);

// Max pairwise vertex distance. For convex polygons this equals the set
// diameter.
double diameter(const Polygon& p);

// Sutherland-Hodgman clip against a single half-plane. Vertices falling on
// the cut line are emitted once. Empty result is a value (nullopt), not an
// error.
std::optional<Polygon> clip_halfplane(const Polygon& p, const HalfPlane& h);

// CCW hull with collinear points dropped. Throws RejectedInput when all
// points are collinear.
Polygon convex_hull(std::vector<Point> points);

// sup over the polygon of v . u.
double polygon_support(const Polygon& p, Point u);

// Inward edge half-planes of a convex CCW polygon.
std::vector<HalfPlane> edge_halfplanes(const Polygon& p);

// How far outside the convex polygon the point lies, measured against the
// edge half-planes; 0 when inside.
double convex_outside_residual(const Polygon& p, Point q);

// Euclidean distance from a point to a convex polygon (0 inside).
double distance_to_convex(const Polygon& p, Point q);

// Nearest point of a convex polygon to q (q itself when inside).
Point closest_point_on_convex(const Polygon& p, Point q);

// Boundary length strictly above / strictly below / on the line
// {x . dir = alpha}. The three parts always sum to the perimeter.
struct BoundarySplit {
  double above = 0.0;
  double below = 0.0;
  double on = 0.0;
};
BoundarySplit split_boundary(const Polygon& p, Point dir, double alpha);

}  // namespace isoperim::geom
