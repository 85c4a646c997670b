#pragma once

#include <cstdint>
#include <span>

namespace pgg {

__extension__ typedef __int128 Wide;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A point with rational coordinates (x/den, y/den), den > 0.
struct RationalPoint {
  Wide x = 0;
  Wide y = 0;
  Wide den = 1;
};

/// Sign of the cross product (b - a) x (c - a).
int orientation(Point a, Point b, Point c);

/// True if the closed segments [a,b] and [c,d] share at least one point.
bool segments_touch(Point a, Point b, Point c, Point d);

/// True if the two segments, which share exactly the endpoint `common`,
/// overlap beyond it (collinear and pointing the same way).
bool segments_overlap_at(Point common, Point b, Point d);

/// Twice the signed area of a polygon; positive for counterclockwise order.
Wide doubled_area(std::span<const Point> polygon);

enum class Containment { Outside, Boundary, Inside };

/// Exact crossing-number test against a simple polygon.
Containment locate(const RationalPoint& p, std::span<const Point> polygon);

/// A point strictly inside a simple counterclockwise polygon: the vertex
/// average for convex polygons, else the centroid of an ear triangle.
RationalPoint interior_point(std::span<const Point> polygon);

}  // namespace pgg
