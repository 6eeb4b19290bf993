#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pburn/geodesic.hpp"

namespace pburn {

enum class Method { brute_force, gonzalez, dp_sliceable, dp_1d, manual };
enum class EvaluatorKind { convex_exact, sampled };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::brute_force: return "brute_force";
    case Method::gonzalez: return "gonzalez";
    case Method::dp_sliceable: return "dp_sliceable";
    case Method::dp_1d: return "dp_1d";
    case Method::manual: return "manual";
  }
  return "?";
}

inline const char* to_string(EvaluatorKind e) {
  return e == EvaluatorKind::convex_exact ? "convex_exact" : "sampled";
}

inline constexpr double kDefaultResolution = 0.01;

struct BurnInstance {
  PolygonalDomain domain;
  int k = 1;

  BurnInstance() = default;
  BurnInstance(PolygonalDomain d, int budget) : domain(std::move(d)), k(budget) {
    if (k < 1 || static_cast<std::size_t>(k) > domain.vertex_count())
      throw Error(ErrorKind::InvalidInstance,
                  "k must lie in [1, " + std::to_string(domain.vertex_count()) + "]");
  }
};

/// The point attaining the burn time and the site that burns it.
struct EvaluationDetail {
  Point witness;
  int witness_site = -1;
  std::size_t candidate_count = 0;
};

struct Evaluation {
  double burn_time = 0.0;
  EvaluationDetail detail;
};

struct BurnSolution {
  std::vector<int> sites;  // sorted vertex indices
  double burn_time = 0.0;
  Method method = Method::manual;
  EvaluatorKind evaluator = EvaluatorKind::convex_exact;
  double resolution = 0.0;  // 0 for exact evaluation
  EvaluationDetail detail;
};

namespace detail {

inline void check_sites(std::span<const int> sites, std::size_t n) {
  if (sites.empty()) throw Error(ErrorKind::EmptySites, "no burn sites given");
  std::vector<int> sorted(sites.begin(), sites.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || static_cast<std::size_t>(sorted.back()) >= n)
    throw Error(ErrorKind::InvalidInstance, "site index out of range");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidInstance, "duplicate site index");
}

// Sutherland-Hodgman clip of a convex polygon by {p : dot(p - origin, normal) <= 0}.
inline std::vector<Point> clip_halfplane(const std::vector<Point>& poly, Point origin, Point normal) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % n];
    const double fa = dot(a - origin, normal), fb = dot(b - origin, normal);
    if (fa <= 0) out.push_back(a);
    if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) out.push_back(lerp(a, b, fa / (fa - fb)));
  }
  return out;
}

}  // namespace detail

/// Exact burn time of a convex polygon: each site's Voronoi cell is clipped to
/// the polygon and the farthest cell vertex from the site is taken. Cell
/// vertices are exactly the polygon vertices, Voronoi-edge/boundary crossings
/// and Voronoi vertices inside the polygon.
inline Evaluation burn_time_convex_exact(const Polygon& poly, std::span<const int> sites) {
  detail::check_sites(sites, poly.size());
  Evaluation best;
  best.burn_time = -1.0;
  for (int s : sites) {
    const Point ps = poly[static_cast<std::size_t>(s)];
    std::vector<Point> cell = poly.vertices();
    for (int t : sites) {
      if (t == s || cell.empty()) continue;
      const Point pt = poly[static_cast<std::size_t>(t)];
      cell = detail::clip_halfplane(cell, lerp(ps, pt, 0.5), pt - ps);
    }
    best.detail.candidate_count += cell.size();
    for (const Point& c : cell) {
      const double d = distance(ps, c);
      if (d > best.burn_time + 1e-12) {
        best.burn_time = d;
        best.detail.witness = c;
        best.detail.witness_site = s;
      }
    }
  }
  return best;
}

/// Sample points of a domain with their geodesic distances to every vertex.
/// Samples nest under refinement: the interior grid and the per-edge boundary
/// splits both use power-of-two subdivisions of fixed base lengths.
class SampleSet {
 public:
  SampleSet(const GeodesicIndex& index, double resolution) : resolution_(resolution) {
    if (!(resolution > 0)) throw Error(ErrorKind::InvalidInstance, "resolution must be positive");
    const auto& dom = index.domain();
    n_ = dom.vertex_count();
    points_ = dom.vertices();
    const auto bnd = boundary_samples(dom, resolution);
    points_.insert(points_.end(), bnd.begin(), bnd.end());

    const auto [lo, hi] = dom.bounding_box();
    const double base = std::max(hi.x - lo.x, hi.y - lo.y);
    spacing_ = base;
    while (spacing_ > resolution) spacing_ /= 2;
    const auto cols = static_cast<std::size_t>(std::floor((hi.x - lo.x) / spacing_ + 1e-9));
    const auto rows = static_cast<std::size_t>(std::floor((hi.y - lo.y) / spacing_ + 1e-9));
    for (std::size_t j = 0; j <= rows; ++j)
      for (std::size_t i = 0; i <= cols; ++i) {
        const Point p{lo.x + static_cast<double>(i) * spacing_, lo.y + static_cast<double>(j) * spacing_};
        if (dom.contains(p)) points_.push_back(p);
      }

    to_vertex_.resize(points_.size() * n_);
    for (std::size_t p = 0; p < points_.size(); ++p) {
      double* row = &to_vertex_[p * n_];
      if (index.convex()) {
        for (std::size_t v = 0; v < n_; ++v) row[v] = distance(points_[p], dom.vertex(v));
      } else {
        const auto d = index.distances_from(points_[p]);
        std::copy(d.begin(), d.end(), row);
      }
    }
  }

  double resolution() const { return resolution_; }
  double grid_spacing() const { return spacing_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  double to_vertex(std::size_t sample, std::size_t vertex) const { return to_vertex_[sample * n_ + vertex]; }

  /// Max over samples of the geodesic distance to the nearest site.
  Evaluation evaluate(std::span<const int> sites) const {
    detail::check_sites(sites, n_);
    Evaluation best;
    best.burn_time = -1.0;
    best.detail.candidate_count = points_.size();
    for (std::size_t p = 0; p < points_.size(); ++p) {
      const double* row = &to_vertex_[p * n_];
      double near = kInf;
      int near_site = -1;
      for (int s : sites)
        if (row[s] < near) {
          near = row[s];
          near_site = s;
        }
      if (near > best.burn_time) {
        best.burn_time = near;
        best.detail.witness = points_[p];
        best.detail.witness_site = near_site;
      }
    }
    return best;
  }

  /// Index of the nearest site for every sample (ties to the earlier site).
  std::vector<int> nearest_sites(std::span<const int> sites) const {
    std::vector<int> out(points_.size(), -1);
    for (std::size_t p = 0; p < points_.size(); ++p) {
      double near = kInf;
      for (int s : sites)
        if (to_vertex(p, static_cast<std::size_t>(s)) < near) {
          near = to_vertex(p, static_cast<std::size_t>(s));
          out[p] = s;
        }
    }
    return out;
  }

 private:
  double resolution_;
  double spacing_ = 0.0;
  std::size_t n_ = 0;
  std::vector<Point> points_;
  std::vector<double> to_vertex_;
};

/// Sampled lower bound on the burn time for arbitrary domains.
inline Evaluation burn_time_sampled(const GeodesicIndex& index, std::span<const int> sites,
                                    double resolution) {
  detail::check_sites(sites, index.vertex_count());
  return SampleSet(index, resolution).evaluate(sites);
}

/// Picks the exact evaluator for convex hole-free domains and the sampled
/// one otherwise; the sample set is built once and reused.
class BurnEvaluator {
 public:
  explicit BurnEvaluator(const GeodesicIndex& index, double resolution = kDefaultResolution)
      : index_(&index), resolution_(resolution) {
    if (!index.convex()) samples_ = std::make_shared<SampleSet>(index, resolution);
  }

  EvaluatorKind kind() const { return samples_ ? EvaluatorKind::sampled : EvaluatorKind::convex_exact; }
  double resolution() const { return samples_ ? resolution_ : 0.0; }
  const GeodesicIndex& index() const { return *index_; }

  Evaluation operator()(std::span<const int> sites) const {
    if (samples_) return samples_->evaluate(sites);
    return burn_time_convex_exact(index_->domain().outer(), sites);
  }

  BurnSolution solution(std::vector<int> sites, Method method) const {
    std::sort(sites.begin(), sites.end());
    const Evaluation e = (*this)(sites);
    BurnSolution out;
    out.sites = std::move(sites);
    out.burn_time = e.burn_time;
    out.method = method;
    out.evaluator = kind();
    out.resolution = resolution();
    out.detail = e.detail;
    return out;
  }

 private:
  const GeodesicIndex* index_;
  double resolution_;
  std::shared_ptr<const SampleSet> samples_;
};

}  // namespace pburn
