#pragma once

#include <array>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "pburn/geometry.hpp"

namespace pburn {

struct Triangulation {
  std::vector<Point> points;
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise index triples

  Triangle triangle(std::size_t t) const {
    const auto& [a, b, c] = triangles[t];
    return {points[a], points[b], points[c]};
  }
};

namespace detail {

using EdgeKey = std::pair<int, int>;

inline EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

// Fan/sweep triangulation of points taken in lexicographic order: every new
// point lies outside the current hull and is joined to the hull edges it sees.
inline std::vector<std::array<int, 3>> sweep_triangulation(const std::vector<Point>& pts) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (distance(pts[order[i - 1]], pts[order[i]]) <= kBoundaryTol)
      throw Error(ErrorKind::DegenerateInput, "duplicate input points");

  std::size_t m = 2;
  while (m < order.size() && orient(pts[order[0]], pts[order[1]], pts[order[m]]) == 0) ++m;
  if (m == order.size()) throw Error(ErrorKind::DegenerateInput, "all points are collinear");

  std::vector<std::array<int, 3>> tris;
  const int apex = order[m];
  const bool left = orient(pts[order[0]], pts[order[m - 1]], pts[apex]) > 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (left)
      tris.push_back({order[i], order[i + 1], apex});
    else
      tris.push_back({order[i + 1], order[i], apex});
  }
  std::vector<int> hull;
  if (left) {
    hull.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    hull.push_back(apex);
  } else {
    hull.push_back(order[0]);
    hull.push_back(apex);
    for (std::size_t i = m - 1; i >= 1; --i) hull.push_back(order[i]);
  }

  for (std::size_t oi = m + 1; oi < order.size(); ++oi) {
    const int p = order[oi];
    const std::size_t h = hull.size();
    std::vector<bool> visible(h);
    bool any = false;
    for (std::size_t j = 0; j < h; ++j) {
      visible[j] = orient(pts[hull[j]], pts[hull[(j + 1) % h]], pts[p]) < 0;
      any = any || visible[j];
    }
    if (!any) throw Error(ErrorKind::DegenerateInput, "point is numerically on the hull");
    // Rotate so the visible edges form the run [start, end).
    std::size_t start = 0;
    while (!(visible[start] && !visible[(start + h - 1) % h])) ++start;
    std::size_t count = 0;
    while (visible[(start + count) % h]) ++count;
    for (std::size_t c = 0; c < count; ++c) {
      const std::size_t j = (start + c) % h;
      tris.push_back({hull[(j + 1) % h], hull[j], p});
    }
    std::vector<int> next;
    next.reserve(h + 1);
    for (std::size_t c = 0; c <= h - count; ++c) next.push_back(hull[(start + count + c) % h]);
    next.push_back(p);
    hull = std::move(next);
  }
  return tris;
}

}  // namespace detail

/// Delaunay triangulation by sweep triangulation followed by Lawson edge flips.
/// Cocircular configurations keep whichever diagonal the sweep produced.
inline Triangulation delaunay(std::vector<Point> points) {
  if (points.size() < 3) throw Error(ErrorKind::DegenerateInput, "need at least 3 points");
  Triangulation out;
  out.points = std::move(points);
  auto& tris = out.triangles;
  tris = detail::sweep_triangulation(out.points);
  const auto& pts = out.points;

  std::map<detail::EdgeKey, std::vector<int>> edge_tris;
  auto attach = [&](int t) {
    for (int e = 0; e < 3; ++e)
      edge_tris[detail::edge_key(tris[t][e], tris[t][(e + 1) % 3])].push_back(t);
  };
  auto detach = [&](int t) {
    for (int e = 0; e < 3; ++e) {
      auto& v = edge_tris[detail::edge_key(tris[t][e], tris[t][(e + 1) % 3])];
      std::erase(v, t);
    }
  };
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) attach(t);

  std::vector<detail::EdgeKey> stack;
  for (const auto& [key, owners] : edge_tris)
    if (owners.size() == 2) stack.push_back(key);

  auto opposite = [&](int t, int a, int b) {
    for (int v : tris[t])
      if (v != a && v != b) return v;
    return -1;
  };

  while (!stack.empty()) {
    const auto key = stack.back();
    stack.pop_back();
    const auto it = edge_tris.find(key);
    if (it == edge_tris.end() || it->second.size() != 2) continue;
    int t1 = it->second[0];
    int t2 = it->second[1];
    // Orient the shared edge as a->b inside t1.
    int a = key.first, b = key.second;
    {
      const auto& tri = tris[t1];
      int pos = 0;
      while (tri[pos] != a) ++pos;
      if (tri[(pos + 1) % 3] != b) std::swap(a, b);
    }
    const int c = opposite(t1, a, b);
    const int d = opposite(t2, a, b);
    if (incircle_det(pts[a], pts[b], pts[c], pts[d]) <= kIncircleTol) continue;
    detach(t1);
    detach(t2);
    tris[t1] = {a, d, c};
    tris[t2] = {d, b, c};
    attach(t1);
    attach(t2);
    for (auto e : {detail::edge_key(a, d), detail::edge_key(d, b), detail::edge_key(b, c),
                   detail::edge_key(c, a)})
      stack.push_back(e);
  }
  return out;
}

/// Undirected edges of a triangulation, each listed once with first < second.
inline std::vector<std::pair<int, int>> triangulation_edges(const Triangulation& tri) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& t : tri.triangles)
    for (int e = 0; e < 3; ++e) edges.push_back(detail::edge_key(t[e], t[(e + 1) % 3]));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace pburn
