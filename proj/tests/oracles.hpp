#pragma once

// Reference computations used to cross-check the library. They share only the
// Point type with it and avoid its predicates, evaluators and solvers.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <random>
#include <utility>
#include <vector>

#include "pburn/pburn.hpp"

namespace oracle {

using pburn::Point;

inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }
inline double cross3(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

// Even-odd test; points within 1e-9 of an edge count as on the ring.
inline int ring_side(Point p, const std::vector<Point>& ring) {
  bool in = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const Point a = ring[i], b = ring[j];
    const double len = dist(a, b);
    const double t = std::clamp(((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / (len * len), 0.0, 1.0);
    if (dist(p, {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}) <= 1e-9) return 0;
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in ? 1 : -1;
}

struct Domain {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;

  // 1 interior, 0 boundary, -1 outside.
  int side(Point p) const {
    const int o = ring_side(p, outer);
    if (o <= 0) return o;
    for (const auto& h : holes) {
      const int s = ring_side(p, h);
      if (s >= 0) return -s;
    }
    return 1;
  }
  bool contains(Point p) const { return side(p) >= 0; }

  std::vector<std::pair<Point, Point>> edges() const {
    std::vector<std::pair<Point, Point>> out;
    auto add = [&](const std::vector<Point>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out.push_back({r[i], r[(i + 1) % r.size()]});
    };
    add(outer);
    for (const auto& h : holes) add(h);
    return out;
  }
};

inline Domain from(const pburn::PolygonalDomain& d) {
  Domain o;
  o.outer = d.outer().vertices();
  for (const auto& h : d.holes()) o.holes.push_back(h.vertices());
  return o;
}

inline bool strictly_cross(Point a, Point b, Point c, Point d) {
  const double d1 = cross3(a, b, c), d2 = cross3(a, b, d), d3 = cross3(c, d, a), d4 = cross3(c, d, b);
  const double eps = 1e-12;
  return ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) && ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps));
}

inline bool segment_inside(const Domain& dom, const std::vector<std::pair<Point, Point>>& edges, Point a, Point b) {
  for (const auto& [c, d] : edges)
    if (strictly_cross(a, b, c, d)) return false;
  for (int i = 1; i < 16; ++i) {
    const double t = i / 16.0;
    if (!dom.contains({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)})) return false;
  }
  return true;
}

/// Shortest paths on a lattice of spacing h over the domain's bounding box.
/// Each node links to the nodes at every primitive offset (dx, dy) with
/// max(|dx|, |dy|) <= reach; reach 1 is the 8-connected grid.
class GridOracle {
 public:
  GridOracle(const pburn::PolygonalDomain& domain, double h, int reach) : dom_(from(domain)), h_(h) {
    const auto box = domain.bounding_box();
    lo_ = box.first;
    nx_ = static_cast<int>(std::llround((box.second.x - lo_.x) / h)) + 1;
    ny_ = static_cast<int>(std::llround((box.second.y - lo_.y) / h)) + 1;
    inside_.assign(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_), false);
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) inside_[id(i, j)] = dom_.contains(node(i, j));
    for (int dx = -reach; dx <= reach; ++dx)
      for (int dy = -reach; dy <= reach; ++dy)
        if ((dx || dy) && std::gcd(std::abs(dx), std::abs(dy)) == 1) offsets_.push_back({dx, dy});
    edges_ = dom_.edges();
  }

  Point node(int i, int j) const { return {lo_.x + i * h_, lo_.y + j * h_}; }

  std::pair<int, int> snap(Point p) const {
    return {static_cast<int>(std::llround((p.x - lo_.x) / h_)), static_cast<int>(std::llround((p.y - lo_.y) / h_))};
  }

  /// Lattice distance between the nodes nearest s and t.
  double distance(Point s, Point t) const {
    const auto [ti, tj] = snap(t);
    return run(s, id(ti, tj));
  }

  /// Largest lattice distance from the node nearest s to any reachable node.
  double eccentricity(Point s) const {
    double best = 0.0;
    run(s, inside_.size(), &best);
    return best;
  }

  /// Lattice distances from s to each target, from one full search.
  std::vector<double> distances_from(Point s, const std::vector<Point>& targets) const {
    std::vector<double> all;
    run(s, inside_.size(), nullptr, &all);
    std::vector<double> out;
    for (const Point& t : targets) {
      const auto [ti, tj] = snap(t);
      out.push_back(all[id(ti, tj)]);
    }
    return out;
  }

 private:
  double run(Point s, std::size_t target, double* farthest = nullptr, std::vector<double>* settled = nullptr) const {
    const auto [si, sj] = snap(s);
    std::vector<double> local;
    std::vector<double>& best = settled ? *settled : local;
    best.assign(inside_.size(), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    best[id(si, sj)] = 0.0;
    pq.push({0.0, id(si, sj)});
    while (!pq.empty()) {
      const auto [d, u] = pq.top();
      pq.pop();
      if (d > best[u]) continue;
      if (u == target) return d;
      if (farthest) *farthest = std::max(*farthest, d);
      const int ui = static_cast<int>(u % static_cast<std::size_t>(nx_)), uj = static_cast<int>(u / static_cast<std::size_t>(nx_));
      for (const auto& [dx, dy] : offsets_) {
        const int vi = ui + dx, vj = uj + dy;
        if (vi < 0 || vj < 0 || vi >= nx_ || vj >= ny_) continue;
        const std::size_t v = id(vi, vj);
        if (!inside_[v]) continue;
        const double nd = d + h_ * std::hypot(dx, dy);
        if (nd >= best[v]) continue;
        if (!segment_inside(dom_, edges_, node(ui, uj), node(vi, vj))) continue;
        best[v] = nd;
        pq.push({nd, v});
      }
    }
    return std::numeric_limits<double>::infinity();
  }

  std::size_t id(int i, int j) const { return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(i); }

  Domain dom_;
  double h_;
  Point lo_;
  int nx_ = 0, ny_ = 0;
  std::vector<bool> inside_;
  std::vector<std::pair<int, int>> offsets_;
  std::vector<std::pair<Point, Point>> edges_;
};

/// Exact burn time of a convex polygon by enumerating candidate points:
/// polygon vertices, bisector/boundary crossings of every site pair and
/// circumcenters of every site triple that fall inside the polygon.
inline double convex_burn_time(const std::vector<Point>& poly, const std::vector<int>& sites) {
  std::vector<Point> cand(poly.begin(), poly.end());
  const std::size_t n = poly.size();
  for (std::size_t a = 0; a < sites.size(); ++a)
    for (std::size_t b = a + 1; b < sites.size(); ++b) {
      const Point u = poly[static_cast<std::size_t>(sites[a])], v = poly[static_cast<std::size_t>(sites[b])];
      // Bisector: points p with (v - u) . p = (|v|^2 - |u|^2) / 2.
      const double nx = v.x - u.x, ny = v.y - u.y, c = (v.x * v.x + v.y * v.y - u.x * u.x - u.y * u.y) / 2;
      for (std::size_t i = 0; i < n; ++i) {
        const Point p = poly[i], q = poly[(i + 1) % n];
        const double fp = nx * p.x + ny * p.y - c, fq = nx * q.x + ny * q.y - c;
        if ((fp <= 0 && fq >= 0) || (fp >= 0 && fq <= 0)) {
          if (fp == fq) continue;
          const double t = fp / (fp - fq);
          cand.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
      }
      for (std::size_t c3 = b + 1; c3 < sites.size(); ++c3) {
        const Point w = poly[static_cast<std::size_t>(sites[c3])];
        const double d = 2 * (u.x * (v.y - w.y) + v.x * (w.y - u.y) + w.x * (u.y - v.y));
        if (std::abs(d) < 1e-15) continue;
        const double uu = u.x * u.x + u.y * u.y, vv = v.x * v.x + v.y * v.y, ww = w.x * w.x + w.y * w.y;
        const Point cc{(uu * (v.y - w.y) + vv * (w.y - u.y) + ww * (u.y - v.y)) / d,
                       (uu * (w.x - v.x) + vv * (u.x - w.x) + ww * (v.x - u.x)) / d};
        if (ring_side(cc, poly) >= 0) cand.push_back(cc);
      }
    }
  double best = 0.0;
  for (const Point& p : cand) {
    double near = std::numeric_limits<double>::infinity();
    for (int s : sites) near = std::min(near, dist(p, poly[static_cast<std::size_t>(s)]));
    best = std::max(best, near);
  }
  return best;
}

/// Burn time of a site set on a line of sorted positions.
inline double line_burn_time(const std::vector<double>& x, const std::vector<int>& sites) {
  double t = std::max(x[static_cast<std::size_t>(sites.front())] - x.front(), x.back() - x[static_cast<std::size_t>(sites.back())]);
  for (std::size_t i = 1; i < sites.size(); ++i)
    t = std::max(t, (x[static_cast<std::size_t>(sites[i])] - x[static_cast<std::size_t>(sites[i - 1])]) / 2);
  return t;
}

/// Minimum over all k-subsets of line_burn_time.
inline double line_optimum(const std::vector<double>& x, int k) {
  double best = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(x.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<unsigned>(k)) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    best = std::min(best, line_burn_time(x, s));
  }
  return best;
}

/// Does any input point fall strictly inside the circumcircle of a triangle?
inline std::size_t empty_circle_violations(const pburn::Triangulation& dt, double tol = 1e-9) {
  std::size_t bad = 0;
  for (const auto& t : dt.triangles) {
    const Point a = dt.points[static_cast<std::size_t>(t[0])], b = dt.points[static_cast<std::size_t>(t[1])],
                c = dt.points[static_cast<std::size_t>(t[2])];
    for (std::size_t w = 0; w < dt.points.size(); ++w) {
      if (static_cast<int>(w) == t[0] || static_cast<int>(w) == t[1] || static_cast<int>(w) == t[2]) continue;
      const Point d = dt.points[w];
      const double adx = a.x - d.x, ady = a.y - d.y, bdx = b.x - d.x, bdy = b.y - d.y, cdx = c.x - d.x, cdy = c.y - d.y;
      const double det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady) +
                         (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
      if (det > tol) ++bad;
    }
  }
  return bad;
}

/// Sum of triangle areas; equals the hull area when the triangles tile it.
inline double triangulation_area(const pburn::Triangulation& dt) {
  double s = 0.0;
  for (const auto& t : dt.triangles)
    s += cross3(dt.points[static_cast<std::size_t>(t[0])], dt.points[static_cast<std::size_t>(t[1])],
                dt.points[static_cast<std::size_t>(t[2])]) /
         2;
  return s;
}

/// Holed domains with coordinates on a 0.05 lattice.
inline std::vector<pburn::PolygonalDomain> holed_domains() {
  using pburn::Polygon;
  using pburn::PolygonalDomain;
  std::vector<PolygonalDomain> out;
  out.emplace_back(Polygon({{0, 0}, {3, 0}, {3, 3}, {0, 3}}), std::vector<Polygon>{Polygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}})});
  out.emplace_back(Polygon({{0, 0}, {4, 0}, {4, 2}, {0, 2}}),
                   std::vector<Polygon>{Polygon({{1, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {1, 1.5}}),
                                        Polygon({{2.5, 0.5}, {3, 0.5}, {3, 1.5}, {2.5, 1.5}})});
  out.emplace_back(Polygon({{0, 0}, {3, 0}, {3, 2.5}, {1.5, 3}, {0, 2.5}}),
                   std::vector<Polygon>{Polygon({{1, 1}, {2, 1}, {1.5, 2}})});
  out.emplace_back(Polygon({{0, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 3}, {0, 3}}),
                   std::vector<Polygon>{Polygon({{0.5, 1.5}, {2.5, 1.5}, {2.5, 2}, {0.5, 2}})});
  out.emplace_back(Polygon({{0, 0}, {3, 0}, {3, 3}, {0, 3}}),
                   std::vector<Polygon>{Polygon({{0.5, 0.5}, {2.5, 0.5}, {2.5, 1}, {1, 1}, {1, 2.5}, {0.5, 2.5}})});
  return out;
}

struct CorpusEntry {
  std::string name;
  pburn::BurnInstance instance;
};

/// 30 instances: 20 random convex polygons, 5 sliceable polygons and 5 holed
/// domains, with k between 1 and 4.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) {
    const int n = 4 + i % 9;
    const int k = 1 + i % 4;
    const double ry = 0.4 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
    out.push_back({"convex" + std::to_string(i),
                   pburn::BurnInstance(pburn::PolygonalDomain(pburn::random_convex_polygon(n, 100 + static_cast<std::uint64_t>(i), 1.0, ry)), k)});
  }
  for (int i = 0; i < 5; ++i)
    out.push_back({"sliceable" + std::to_string(i),
                   pburn::BurnInstance(pburn::PolygonalDomain(pburn::generate_sliceable(5 + i, 300 + static_cast<std::uint64_t>(i))), 1 + i % 4)});
  const auto holed = holed_domains();
  for (std::size_t i = 0; i < holed.size(); ++i)
    out.push_back({"holed" + std::to_string(i), pburn::BurnInstance(holed[i], 1 + static_cast<int>(i % 3))});
  return out;
}

}  // namespace oracle
