#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pburn/burn.hpp"
#include "pburn/delaunay.hpp"

namespace pburn {

struct CircumcenterInfo {
  std::array<int, 3> triangle;
  Point center;
  Location location = Location::outside;
};

struct SliceabilityReport {
  bool convex = false;
  Triangulation triangles;
  std::vector<CircumcenterInfo> circumcenters;
  bool sliceable = false;
  std::optional<std::vector<int>> ordering;
};

namespace detail {

// Bisector/boundary contacts; one point when the bisector only touches P.
inline std::vector<Point> bisector_contacts(Point u, Point v, const Polygon& poly) {
  try {
    const auto [p, q] = bisector_chord(u, v, poly);
    return {p, q};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateChord) throw;
  }
  // Touching case: the vertex nearest the bisector line.
  const Point mid = lerp(u, v, 0.5), dir = v - u;
  std::size_t best = 0;
  for (std::size_t i = 1; i < poly.size(); ++i)
    if (std::abs(dot(poly[i] - mid, dir)) < std::abs(dot(poly[best] - mid, dir))) best = i;
  return {poly[best]};
}

// Whether the Voronoi edge between vertices u and v of VD(V) meets the open
// polygon: some sample of the clipped bisector chord is strictly closer to u
// and v than to every other vertex.
inline bool voronoi_edge_crosses(const Polygon& poly, int u, int v) {
  std::vector<Point> chord;
  try {
    const auto [p, q] = bisector_chord(poly[static_cast<std::size_t>(u)], poly[static_cast<std::size_t>(v)], poly);
    chord = {p, q};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateChord) throw;
    return false;
  }
  for (int s = 1; s <= 9; ++s) {
    const Point x = lerp(chord[0], chord[1], s / 10.0);
    const double du = distance(x, poly[static_cast<std::size_t>(u)]);
    bool closest = true;
    for (std::size_t w = 0; w < poly.size() && closest; ++w) {
      if (static_cast<int>(w) == u || static_cast<int>(w) == v) continue;
      closest = du < distance(x, poly[w]) - 1e-9;
    }
    if (closest) return true;
  }
  return false;
}

}  // namespace detail

/// Delaunay edges of the polygon's vertices whose dual Voronoi edge crosses it.
inline std::vector<std::pair<int, int>> crossing_voronoi_edges(const Polygon& poly, const Triangulation& dt) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, v] : triangulation_edges(dt))
    if (detail::voronoi_edge_crosses(poly, u, v)) out.push_back({u, v});
  return out;
}

/// Path order of the vertices along the Voronoi-adjacency graph inside P,
/// starting from the path endpoint with the smaller vertex index.
inline std::vector<int> compute_ordering(const Polygon& poly) {
  const Triangulation dt = delaunay(poly.vertices());
  const auto edges = crossing_voronoi_edges(poly, dt);
  const std::size_t n = poly.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v].size() > 2)
      throw Error(ErrorKind::NotAPath, "vertex " + std::to_string(v) + " has " +
                                           std::to_string(adj[v].size()) + " Voronoi neighbours inside P");
  if (edges.size() != n - 1)
    throw Error(ErrorKind::NotAPath, "adjacency graph has " + std::to_string(edges.size()) +
                                         " edges, expected " + std::to_string(n - 1));
  int start = -1;
  for (std::size_t v = 0; v < n && start < 0; ++v)
    if (adj[v].size() <= 1) start = static_cast<int>(v);
  if (start < 0) throw Error(ErrorKind::NotAPath, "adjacency graph is a cycle");
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : adj[static_cast<std::size_t>(cur)])
      if (w != prev) next = w;
    if (next < 0) break;
    prev = cur;
    cur = next;
    order.push_back(cur);
    if (order.size() > n) break;
  }
  if (order.size() != n) throw Error(ErrorKind::NotAPath, "adjacency graph is disconnected");
  return order;
}

inline SliceabilityReport is_sliceable(const Polygon& poly) {
  SliceabilityReport r;
  r.convex = poly.is_convex();
  r.triangles = delaunay(poly.vertices());
  bool clear = true;
  for (std::size_t t = 0; t < r.triangles.triangles.size(); ++t) {
    CircumcenterInfo info;
    info.triangle = r.triangles.triangles[t];
    info.center = circumcenter(r.triangles.triangle(t));
    info.location = point_in_polygon(info.center, poly);
    clear = clear && info.location == Location::outside;
    r.circumcenters.push_back(info);
  }
  r.sliceable = r.convex && clear;
  if (r.sliceable) r.ordering = compute_ordering(poly);
  return r;
}

/// Vertices v_1 < ... < v_n on a line and a site budget.
struct OneDimInstance {
  std::vector<double> positions;
  int k = 1;

  OneDimInstance() = default;
  OneDimInstance(std::vector<double> pos, int budget) : positions(std::move(pos)), k(budget) {
    if (positions.empty()) throw Error(ErrorKind::InvalidInstance, "no positions");
    for (std::size_t i = 1; i < positions.size(); ++i)
      if (!(positions[i] > positions[i - 1]))
        throw Error(ErrorKind::InvalidInstance, "positions must be strictly increasing");
    if (k < 1 || static_cast<std::size_t>(k) > positions.size())
      throw Error(ErrorKind::InvalidInstance, "k must lie in [1, n]");
  }
};

/// values(i, r): minimum time to burn everything from i onward with i a site
/// and at most r further sites; choices(i, r) is the next site (-1 when r = 0
/// or when the best plan uses fewer than r).
struct DpTable {
  std::size_t n = 0;
  std::size_t budget = 0;  // columns 0..budget
  std::vector<double> values;
  std::vector<int> choices;

  DpTable() = default;
  DpTable(std::size_t rows, std::size_t max_budget)
      : n(rows), budget(max_budget), values(rows * (max_budget + 1), kInf), choices(rows * (max_budget + 1), -1) {}

  double& value(std::size_t i, std::size_t r) { return values[i * (budget + 1) + r]; }
  double value(std::size_t i, std::size_t r) const { return values[i * (budget + 1) + r]; }
  int& choice(std::size_t i, std::size_t r) { return choices[i * (budget + 1) + r]; }
  int choice(std::size_t i, std::size_t r) const { return choices[i * (budget + 1) + r]; }
};

namespace detail {

// Shared recurrence: gap(i, j) is the cost of the region between consecutive
// sites i < j, tail(i) the cost with no further site, head(i) the cost of the
// region before the first site i.
template <typename Gap, typename Tail, typename Head>
std::pair<double, std::vector<int>> ordered_dp(std::size_t n, int k, Gap gap, Tail tail, Head head, DpTable& table) {
  // Columns 0..k; the outer formula reads column k - 1.
  const std::size_t budget = static_cast<std::size_t>(k - 1);
  table = DpTable(n, budget + 1);
  for (std::size_t i = 0; i < n; ++i) table.value(i, 0) = tail(i);
  for (std::size_t r = 1; r <= budget + 1; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double c = std::max(gap(i, j), table.value(j, r - 1));
        if (c < table.value(i, r)) {
          table.value(i, r) = c;
          table.choice(i, r) = static_cast<int>(j);
        }
      }
      // A spare site never hurts, so budget r also covers r - 1. Keeps cells
      // with fewer than r vertices after i finite; choice -1 marks the carry.
      if (table.value(i, r - 1) < table.value(i, r)) {
        table.value(i, r) = table.value(i, r - 1);
        table.choice(i, r) = -1;
      }
    }
  double best = kInf;
  std::size_t first = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::max(head(i), table.value(i, budget));
    if (c < best) {
      best = c;
      first = i;
    }
  }
  std::vector<int> sites;
  if (best == kInf) return {best, sites};
  std::size_t cur = first;
  sites.push_back(static_cast<int>(cur));
  for (std::size_t r = budget; r > 0; --r) {
    if (table.choice(cur, r) < 0) continue;
    cur = static_cast<std::size_t>(table.choice(cur, r));
    sites.push_back(static_cast<int>(cur));
  }
  // Unused budget goes to the lowest free positions.
  std::vector<bool> used(n, false);
  for (int s : sites) used[static_cast<std::size_t>(s)] = true;
  for (std::size_t i = 0; i < n && sites.size() < static_cast<std::size_t>(k); ++i)
    if (!used[i]) sites.push_back(static_cast<int>(i));
  std::sort(sites.begin(), sites.end());
  return {best, sites};
}

}  // namespace detail

inline BurnSolution solve_dp_1d(const OneDimInstance& inst, DpTable* table_out = nullptr) {
  const auto& x = inst.positions;
  const std::size_t n = x.size();
  DpTable table;
  auto [time, sites] = detail::ordered_dp(
      n, inst.k, [&](std::size_t i, std::size_t j) { return (x[j] - x[i]) / 2.0; },
      [&](std::size_t i) { return x[n - 1] - x[i]; }, [&](std::size_t i) { return x[i] - x[0]; }, table);
  if (table_out) *table_out = std::move(table);
  BurnSolution s;
  s.sites = std::move(sites);
  s.burn_time = time;
  s.method = Method::dp_1d;
  s.evaluator = EvaluatorKind::convex_exact;
  return s;
}

struct SliceableDp {
  std::vector<int> order;  // vertex indices in ordering position
  DpTable table;           // rows indexed by ordering position
  BurnSolution solution;
};

/// Exact burn time of a sliceable polygon by dynamic programming over the
/// Voronoi ordering of its vertices.
inline SliceableDp sliceable_dp(const Polygon& poly, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > poly.size())
    throw Error(ErrorKind::InvalidInstance, "k must lie in [1, n]");
  const SliceabilityReport rep = is_sliceable(poly);
  if (!rep.sliceable) throw Error(ErrorKind::NotSliceable, "polygon is not sliceable");
  SliceableDp out;
  out.order = *rep.ordering;
  const std::size_t n = poly.size();
  std::vector<Point> v(n);
  for (std::size_t a = 0; a < n; ++a) v[a] = poly[static_cast<std::size_t>(out.order[a])];

  // chord_cost(a, b): farthest bisector/boundary contact of v_a v_b from v_b.
  DistanceMatrix chord_cost(n, 0.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      double c = 0.0;
      for (const Point& p : detail::bisector_contacts(v[a], v[b], poly)) c = std::max(c, distance(v[b], p));
      chord_cost(a, b) = c;
    }

  auto [time, positions] = detail::ordered_dp(
      n, k, [&](std::size_t a, std::size_t b) { return chord_cost(a, b); },
      [&](std::size_t a) { return distance(v[a], v[n - 1]); }, [&](std::size_t a) { return distance(v[0], v[a]); },
      out.table);

  std::vector<int> sites;
  for (int a : positions) sites.push_back(out.order[static_cast<std::size_t>(a)]);
  std::sort(sites.begin(), sites.end());
  out.solution.sites = sites;
  out.solution.burn_time = time;
  out.solution.method = Method::dp_sliceable;
  out.solution.evaluator = EvaluatorKind::convex_exact;
  if (!sites.empty()) out.solution.detail = burn_time_convex_exact(poly, sites).detail;
  return out;
}

inline BurnSolution solve_dp_sliceable(const Polygon& poly, int k) { return sliceable_dp(poly, k).solution; }

struct SubsetSliceabilityReport {
  std::size_t subsets_checked = 0;
  std::size_t circumcenters_checked = 0;
  std::vector<std::vector<int>> circumcenter_violations;  // subsets with a circumcenter in P
  std::vector<std::vector<int>> hull_violations;          // subsets whose hull is not sliceable
  bool exhaustive = false;
  bool passed() const { return circumcenter_violations.empty() && hull_violations.empty(); }
};

/// Every subset S of the vertices with |S| >= 3: no circumcenter of DT(S) lies
/// in P and conv(S) is sliceable. Exhaustive when 2^n <= 4096, otherwise
/// `trials` random subsets.
inline SubsetSliceabilityReport check_subset_sliceability(const Polygon& poly, std::size_t trials = 2000,
                                                          std::uint64_t seed = 1) {
  SubsetSliceabilityReport rep;
  const std::size_t n = poly.size();
  auto check = [&](const std::vector<int>& subset) {
    std::vector<Point> pts;
    for (int i : subset) pts.push_back(poly[static_cast<std::size_t>(i)]);
    ++rep.subsets_checked;
    const Triangulation dt = delaunay(pts);
    bool bad = false;
    for (std::size_t t = 0; t < dt.triangles.size(); ++t) {
      ++rep.circumcenters_checked;
      if (point_in_polygon(circumcenter(dt.triangle(t)), poly) != Location::outside) bad = true;
    }
    if (bad) rep.circumcenter_violations.push_back(subset);
    bool hull_ok = false;
    try {
      hull_ok = is_sliceable(convex_hull(pts)).sliceable;
    } catch (const Error&) {
      hull_ok = false;
    }
    if (!hull_ok) rep.hull_violations.push_back(subset);
  };
  auto subset_of = [&](std::uint64_t mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(static_cast<int>(i));
    return s;
  };
  if (n < 63 && (std::uint64_t{1} << n) <= 4096) {
    rep.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (std::popcount(mask) >= 3) check(subset_of(mask));
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<int> s;
      while (s.size() < 3) {
        s.clear();
        for (std::size_t i = 0; i < n; ++i)
          if (rng() & 1U) s.push_back(static_cast<int>(i));
      }
      check(s);
    }
  }
  return rep;
}

enum class GeneratorShape {
  flat,          // convex position on a flat ellipse: x spread 10, y spread <= 0.8
  near_regular,  // jittered regular polygon; never sliceable
};

struct GeneratorOptions {
  GeneratorShape shape = GeneratorShape::flat;
  double x_spread = 10.0;
  double y_spread = 0.8;
  int max_attempts = 10'000;
};

/// Rejection-samples convex polygons until one is sliceable; deterministic in
/// the seed.
inline Polygon generate_sliceable(int n, std::uint64_t seed, const GeneratorOptions& opt = {}) {
  if (n < 3) throw Error(ErrorKind::InvalidInstance, "n must be at least 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::acos(-1.0);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (double& a : angles) a = 2.0 * pi * unit(rng);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    if (opt.shape == GeneratorShape::flat) {
      const double rx = opt.x_spread / 2.0;
      const double ry = opt.y_spread / 2.0 * (0.25 + 0.75 * unit(rng));
      for (double a : angles) pts.push_back({rx + rx * std::cos(a), ry * std::sin(a)});
    } else {
      for (int i = 0; i < n; ++i) {
        const double a = 2.0 * pi * i / n + 0.05 * (unit(rng) - 0.5);
        pts.push_back({std::cos(a), std::sin(a)});
      }
    }
    try {
      Polygon poly(pts);
      if (poly.size() != static_cast<std::size_t>(n) || !poly.is_convex()) continue;
      if (is_sliceable(poly).sliceable) return poly;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorKind::GenerationFailed,
              "no sliceable polygon after " + std::to_string(opt.max_attempts) + " attempts");
}

/// Random convex polygon with vertices at sorted random angles on an ellipse
/// with the given radii; deterministic in the seed.
inline Polygon random_convex_polygon(int n, std::uint64_t seed, double rx = 1.0, double ry = 1.0) {
  if (n < 3) throw Error(ErrorKind::InvalidInstance, "n must be at least 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double pi = std::acos(-1.0);
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (double& a : angles) a = 2.0 * pi * unit(rng);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    for (double a : angles) pts.push_back({rx * std::cos(a), ry * std::sin(a)});
    try {
      Polygon poly(pts);
      if (poly.size() == static_cast<std::size_t>(n) && poly.is_convex()) return poly;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorKind::GenerationFailed, "no convex polygon generated");
}

}  // namespace pburn
