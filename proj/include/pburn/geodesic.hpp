#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "pburn/domain.hpp"

namespace pburn {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Dense row-major square matrix of lengths.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Visibility graph over the domain vertices with all-pairs geodesic
/// distances. Immutable after construction; queries are const and allocate
/// their own scratch space.
class GeodesicIndex {
 public:
  GeodesicIndex() = default;

  explicit GeodesicIndex(PolygonalDomain domain)
      : domain_(std::move(domain)), convex_(domain_.is_convex_simple()) {
    const std::size_t n = domain_.vertex_count();
    adjacency_.assign(n, {});
    dist_ = DistanceMatrix(n, kInf);
    for (std::size_t i = 0; i < n; ++i) {
      dist_(i, i) = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!segment_in_domain(domain_.vertex(i), domain_.vertex(j))) continue;
        const double w = distance(domain_.vertex(i), domain_.vertex(j));
        adjacency_[i].push_back({j, w});
        adjacency_[j].push_back({i, w});
        dist_(i, j) = dist_(j, i) = w;
      }
    }
    // Floyd-Warshall; n stays small at the scales this library targets.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        const double dik = dist_(i, k);
        if (dik == kInf) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const double via = dik + dist_(k, j);
          if (via < dist_(i, j)) dist_(i, j) = via;
        }
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (dist_(i, j) == kInf)
          throw Error(ErrorKind::InvalidDomain, "domain vertices are not mutually reachable");
  }

  const PolygonalDomain& domain() const { return domain_; }
  std::size_t vertex_count() const { return domain_.vertex_count(); }
  bool convex() const { return convex_; }

  struct Neighbor {
    std::size_t vertex;
    double weight;
  };
  const std::vector<Neighbor>& neighbors(std::size_t v) const { return adjacency_[v]; }
  const DistanceMatrix& vertex_distances() const { return dist_; }

  /// True when the closed segment ab stays inside the closed domain. Grazing
  /// the boundary (through reflex vertices or along edges) is allowed.
  bool segment_in_domain(Point a, Point b) const {
    if (convex_) return domain_.contains(a) && domain_.contains(b);
    for (const Segment& e : domain_.edges())
      if (segments_properly_cross(a, b, e.a, e.b)) return false;
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    std::vector<double> ts{0.0, 1.0};
    if (len2 > 0.0)
      for (const Point& w : domain_.vertices())
        if (on_segment(w, a, b)) ts.push_back(std::clamp(dot(w - a, ab) / len2, 0.0, 1.0));
    std::sort(ts.begin(), ts.end());
    if (!domain_.contains(a)) return false;
    for (std::size_t i = 1; i < ts.size(); ++i) {
      if (ts[i] - ts[i - 1] <= 1e-12) continue;
      if (!domain_.contains(lerp(a, b, 0.5 * (ts[i] + ts[i - 1])))) return false;
    }
    return domain_.contains(b);
  }

  /// Geodesic distance from p (inside the closed domain) to every vertex.
  std::vector<double> distances_from(Point p) const {
    const std::size_t n = vertex_count();
    std::vector<double> direct(n, kInf);
    for (std::size_t v = 0; v < n; ++v)
      if (segment_in_domain(p, domain_.vertex(v))) direct[v] = distance(p, domain_.vertex(v));
    if (convex_) return direct;
    std::vector<double> out(n, kInf);
    for (std::size_t v = 0; v < n; ++v) {
      if (direct[v] == kInf) continue;
      for (std::size_t u = 0; u < n; ++u) out[u] = std::min(out[u], direct[v] + dist_(v, u));
    }
    return out;
  }

  double distance(Point s, Point t) const {
    if (!domain_.contains(s) || !domain_.contains(t))
      throw Error(ErrorKind::PointOutsideDomain, "query point lies outside the domain");
    if (t < s) std::swap(s, t);  // same arithmetic either way round
    if (segment_in_domain(s, t)) return pburn::distance(s, t);
    const std::vector<double> from_s = distances_from(s);
    double best = kInf;
    for (std::size_t v = 0; v < vertex_count(); ++v) {
      if (from_s[v] == kInf || !segment_in_domain(domain_.vertex(v), t)) continue;
      best = std::min(best, from_s[v] + pburn::distance(domain_.vertex(v), t));
    }
    return best;
  }

 private:
  PolygonalDomain domain_;
  bool convex_ = false;
  std::vector<std::vector<Neighbor>> adjacency_;
  DistanceMatrix dist_;
};

inline GeodesicIndex build_index(PolygonalDomain domain) { return GeodesicIndex(std::move(domain)); }

inline double geodesic_distance(const GeodesicIndex& index, Point s, Point t) {
  return index.distance(s, t);
}

inline const DistanceMatrix& vertex_distance_matrix(const GeodesicIndex& index) {
  return index.vertex_distances();
}

/// Points spaced at most `resolution` apart along every boundary edge,
/// excluding the edge endpoints. Each edge is split into a power-of-two
/// number of pieces so that halving the resolution refines the sample set.
inline std::vector<Point> boundary_samples(const PolygonalDomain& domain, double resolution) {
  std::vector<Point> out;
  for (const Segment& e : domain.edges()) {
    std::size_t pieces = 1;
    while (e.length() / static_cast<double>(pieces) > resolution) pieces *= 2;
    for (std::size_t i = 1; i < pieces; ++i)
      out.push_back(lerp(e.a, e.b, static_cast<double>(i) / static_cast<double>(pieces)));
  }
  return out;
}

/// Lower bound on the geodesic diameter: exact for convex hole-free domains
/// (attained at vertices); otherwise the maximum over pairs of vertices and
/// boundary samples.
inline double diameter_estimate(const GeodesicIndex& index, double resolution) {
  if (!(resolution > 0)) throw Error(ErrorKind::InvalidInstance, "resolution must be positive");
  const auto& dom = index.domain();
  const std::size_t n = dom.vertex_count();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, index.vertex_distances()(i, j));
  if (index.convex()) return best;

  std::vector<Point> pts = dom.vertices();
  const auto extra = boundary_samples(dom, resolution);
  pts.insert(pts.end(), extra.begin(), extra.end());
  const std::size_t m = pts.size();
  std::vector<std::vector<double>> geo(m);
  std::vector<std::vector<std::pair<std::size_t, double>>> sees(m);
  for (std::size_t p = 0; p < m; ++p) {
    geo[p] = index.distances_from(pts[p]);
    for (std::size_t v = 0; v < n; ++v)
      if (index.segment_in_domain(pts[p], dom.vertex(v)))
        sees[p].push_back({v, distance(pts[p], dom.vertex(v))});
  }
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      double d;
      if (index.segment_in_domain(pts[p], pts[q])) {
        d = distance(pts[p], pts[q]);
      } else {
        d = kInf;
        for (const auto& [v, w] : sees[q]) d = std::min(d, geo[p][v] + w);
      }
      best = std::max(best, d);
    }
  return best;
}

}  // namespace pburn
