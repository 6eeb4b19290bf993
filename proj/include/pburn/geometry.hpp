#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pburn/error.hpp"

namespace pburn {

// Absolute tolerances. Instances are expected at desk scale (coordinates of
// order 1..100); exact predicates are not used.
inline constexpr double kOrientTol = 1e-9;
inline constexpr double kIncircleTol = 1e-9;
inline constexpr double kBoundaryTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
  friend Point operator*(double s, Point a) { return {a.x * s, a.y * s}; }
  friend bool operator==(Point a, Point b) = default;
  friend auto operator<=>(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline Point lerp(Point a, Point b, double t) { return a + (b - a) * t; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
  Point midpoint() const { return lerp(a, b, 0.5); }
};

/// Twice the signed area of triangle pqr; positive when r is left of p->q.
inline double orient_det(Point p, Point q, Point r) { return cross(q - p, r - p); }

/// +1 if r is strictly left of the directed line pq, -1 if right, 0 if collinear.
inline int orient(Point p, Point q, Point r) {
  const double d = orient_det(p, q, r);
  if (d > kOrientTol) return 1;
  if (d < -kOrientTol) return -1;
  return 0;
}

inline double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

inline bool on_segment(Point p, Point a, Point b, double tol = kBoundaryTol) {
  return distance_to_segment(p, a, b) <= tol;
}

/// True when the open segments ab and cd cross at a single interior point of
/// both. Touching, collinear overlap and endpoint contact do not count.
inline bool segments_properly_cross(Point a, Point b, Point c, Point d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

/// Closed-segment intersection test (touching counts).
inline bool segments_intersect(Point a, Point b, Point c, Point d) {
  if (segments_properly_cross(a, b, c, d)) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

inline double signed_area(std::span<const Point> ring) {
  double s = 0.0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(ring[i], ring[(i + 1) % n]);
  return 0.5 * s;
}

enum class Location { inside, boundary, outside };

inline const char* to_string(Location loc) {
  switch (loc) {
    case Location::inside: return "inside";
    case Location::boundary: return "boundary";
    case Location::outside: return "outside";
  }
  return "?";
}

/// Classifies p against a closed ring of either orientation (even-odd rule).
inline Location locate_in_ring(Point p, std::span<const Point> ring) {
  const std::size_t n = ring.size();
  bool in = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point a = ring[j];
    const Point b = ring[i];
    if (on_segment(p, a, b)) return Location::boundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) in = !in;
    }
  }
  return in ? Location::inside : Location::outside;
}

/// A simple polygon stored counter-clockwise. Construction normalizes the
/// orientation and rejects zero-area, self-intersecting or degenerate chains.
class Polygon {
 public:
  Polygon() = default;

  explicit Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3)
      throw Error(ErrorKind::InvalidPolygon, "polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!is_finite(vertices_[i]))
        throw Error(ErrorKind::InvalidPolygon, "vertex " + std::to_string(i) + " is not finite");
      if (distance(vertices_[i], vertices_[(i + 1) % vertices_.size()]) <= kBoundaryTol)
        throw Error(ErrorKind::InvalidPolygon,
                    "vertices " + std::to_string(i) + " and " +
                        std::to_string((i + 1) % vertices_.size()) + " coincide");
    }
    const double area = signed_area(vertices_);
    if (std::abs(area) <= kOrientTol)
      throw Error(ErrorKind::InvalidPolygon, "polygon has zero area");
    if (area < 0) std::reverse(vertices_.begin(), vertices_.end());
    if (auto why = self_intersection(); !why.empty())
      throw Error(ErrorKind::InvalidPolygon, why);
  }

  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  Segment edge(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % size()]}; }
  double area() const { return signed_area(vertices_); }

  /// Convex means no clockwise turn; collinear vertices are allowed.
  bool is_convex() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
      if (orient(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) < 0) return false;
    return true;
  }

  std::pair<Point, Point> bounding_box() const {
    Point lo = vertices_[0], hi = vertices_[0];
    for (const Point& p : vertices_) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    return {lo, hi};
  }

 private:
  std::string self_intersection() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      const Segment e = edge(i);
      const Point next = vertices_[(i + 2) % n];
      // Consecutive edges may be collinear but must not fold back.
      if (orient(e.a, e.b, next) == 0 && dot(e.b - e.a, next - e.b) < 0)
        return "edges " + std::to_string(i) + " and " + std::to_string((i + 1) % n) + " overlap";
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        const Segment f = edge(j);
        if (segments_intersect(e.a, e.b, f.a, f.b))
          return "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
      }
    }
    return {};
  }

  std::vector<Point> vertices_;
};

inline Location point_in_polygon(Point p, const Polygon& poly) {
  return locate_in_ring(p, poly.vertices());
}

struct Triangle {
  Point p;
  Point q;
  Point r;
};

inline Point circumcenter(const Triangle& t) {
  const Point b = t.q - t.p;
  const Point c = t.r - t.p;
  const double d = 2.0 * cross(b, c);
  if (std::abs(d) <= 2.0 * kOrientTol)
    throw Error(ErrorKind::CollinearTriangle, "triangle is collinear");
  const double b2 = dot(b, b);
  const double c2 = dot(c, c);
  const Point rel{(c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d};
  return t.p + rel;
}

/// Positive when d lies inside the circumcircle of the counter-clockwise
/// triangle abc, negative outside.
inline double incircle_det(Point a, Point b, Point c, Point d) {
  const Point ad = a - d, bd = b - d, cd = c - d;
  const double a2 = dot(ad, ad), b2 = dot(bd, bd), c2 = dot(cd, cd);
  return a2 * cross(bd, cd) - b2 * cross(ad, cd) + c2 * cross(ad, bd);
}

/// Endpoints of the perpendicular bisector of uv clipped to a convex polygon,
/// the one left of u->v first.
inline std::pair<Point, Point> bisector_chord(Point u, Point v, const Polygon& poly) {
  const Point dir = v - u;
  const double len = norm(dir);
  if (len <= kBoundaryTol) throw Error(ErrorKind::DegenerateChord, "u and v coincide");
  const Point mid = lerp(u, v, 0.5);
  // Signed offset of each vertex from the bisector line, in length units.
  const std::size_t n = poly.size();
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = dot(poly[i] - mid, dir) / len;

  std::vector<Point> hits;
  auto add = [&hits](Point p) {
    for (const Point& h : hits)
      if (distance(h, p) <= kBoundaryTol) return;
    hits.push_back(p);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const bool on_i = std::abs(f[i]) <= kBoundaryTol;
    const bool on_j = std::abs(f[j]) <= kBoundaryTol;
    if (on_i) add(poly[i]);
    if (!on_i && !on_j && (f[i] < 0) != (f[j] < 0)) {
      const double t = f[i] / (f[i] - f[j]);
      add(lerp(poly[i], poly[j], t));
    }
  }
  if (hits.size() < 2) throw Error(ErrorKind::DegenerateChord, "bisector touches the polygon in one point");
  if (hits.size() > 2) {
    // Convexity guarantees two extreme points along the bisector direction.
    const Point along{-dir.y, dir.x};
    auto by = [&](Point a, Point b) { return dot(a, along) < dot(b, along); };
    const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end(), by);
    hits = {*lo, *hi};
  }
  if (orient_det(u, v, hits[0]) < orient_det(u, v, hits[1])) std::swap(hits[0], hits[1]);
  return {hits[0], hits[1]};
}

/// Counter-clockwise convex hull with collinear boundary points dropped.
inline Polygon convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end(),
                           [](Point a, Point b) { return distance(a, b) <= kBoundaryTol; }),
               points.end());
  if (points.size() < 3) throw Error(ErrorKind::DegenerateInput, "fewer than 3 distinct points");
  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw Error(ErrorKind::DegenerateInput, "points are collinear");
  return Polygon(std::move(hull));
}

}  // namespace pburn
