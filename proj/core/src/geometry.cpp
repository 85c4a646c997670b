#include "pgg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgg {
namespace {

int sign(Wide v) { return (v > 0) - (v < 0); }

Wide cross(Wide ax, Wide ay, Wide bx, Wide by) { return ax * by - ay * bx; }

bool on_segment(Point a, Point b, Point p) {
  return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

int orientation(Point a, Point b, Point c) {
  return sign(cross(Wide{b.x} - a.x, Wide{b.y} - a.y, Wide{c.x} - a.x, Wide{c.y} - a.y));
}

bool segments_touch(Point a, Point b, Point c, Point d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

bool segments_overlap_at(Point common, Point b, Point d) {
  if (orientation(common, b, d) != 0) return false;
  const Wide dot = (Wide{b.x} - common.x) * (Wide{d.x} - common.x) + (Wide{b.y} - common.y) * (Wide{d.y} - common.y);
  return dot > 0;
}

Wide doubled_area(std::span<const Point> polygon) {
  Wide acc = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    acc += Wide{p.x} * q.y - Wide{q.x} * p.y;
  }
  return acc;
}

Containment locate(const RationalPoint& p, std::span<const Point> polygon) {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Wide ax = Wide{polygon[i].x} * p.den, ay = Wide{polygon[i].y} * p.den;
    const Wide bx = Wide{polygon[(i + 1) % n].x} * p.den, by = Wide{polygon[(i + 1) % n].y} * p.den;
    const Wide o = cross(bx - ax, by - ay, p.x - ax, p.y - ay);
    if (o == 0 && std::min(ax, bx) <= p.x && p.x <= std::max(ax, bx) && std::min(ay, by) <= p.y &&
        p.y <= std::max(ay, by)) {
      return Containment::Boundary;
    }
    if ((ay > p.y) != (by > p.y)) {
      // Upward edges cross the rightward ray when p is to their left.
      if ((by > ay) ? (o > 0) : (o < 0)) inside = !inside;
    }
  }
  return inside ? Containment::Inside : Containment::Outside;
}

RationalPoint interior_point(std::span<const Point> polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) throw std::invalid_argument("interior_point: degenerate polygon");
  bool convex = true;
  for (std::size_t i = 0; i < n && convex; ++i) {
    if (orientation(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) < 0) convex = false;
  }
  if (convex) {
    RationalPoint r{0, 0, static_cast<Wide>(n)};
    for (const Point& p : polygon) {
      r.x += p.x;
      r.y += p.y;
    }
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = polygon[(i + n - 1) % n], b = polygon[i], c = polygon[(i + 1) % n];
    if (orientation(a, b, c) <= 0) continue;
    bool ear = true;
    for (std::size_t j = 0; j < n && ear; ++j) {
      const Point& q = polygon[j];
      if (q == a || q == b || q == c) continue;
      if (orientation(a, b, q) >= 0 && orientation(b, c, q) >= 0 && orientation(c, a, q) >= 0) ear = false;
    }
    if (ear) return RationalPoint{Wide{a.x} + b.x + c.x, Wide{a.y} + b.y + c.y, 3};
  }
  throw std::logic_error("interior_point: no ear found; polygon is not simple");
}

}  // namespace pgg
