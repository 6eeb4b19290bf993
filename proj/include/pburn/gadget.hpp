#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pburn/burn.hpp"
#include "pburn/solvers.hpp"

namespace pburn {

inline constexpr double kDefaultEpsilon = 1.0 / 128.0;
inline constexpr double kMaxEpsilon = 1.0 / 120.0;

/// Planar max-degree-4 graph with an orthogonal drawing on the integer grid.
/// Each route runs from one vertex placement to another and includes both.
struct OrthogonalDrawing {
  std::vector<Point> vertices;
  std::vector<std::vector<Point>> routes;
  int kappa = 0;
};

namespace detail {

inline bool is_integer(double v) { return std::abs(v - std::round(v)) <= 1e-9; }

inline int find_placement(const std::vector<Point>& placements, Point p) {
  for (std::size_t i = 0; i < placements.size(); ++i)
    if (distance(placements[i], p) <= 1e-9) return static_cast<int>(i);
  return -1;
}

// Intersection of two axis-aligned segments: nothing, one point, or an overlap
// of positive length (reported as nullopt with overlap = true).
inline std::optional<Point> axis_intersection(Segment s, Segment t, bool& overlap) {
  overlap = false;
  auto lo = [](double a, double b) { return std::min(a, b); };
  auto hi = [](double a, double b) { return std::max(a, b); };
  const double x0 = std::max(lo(s.a.x, s.b.x), lo(t.a.x, t.b.x));
  const double x1 = std::min(hi(s.a.x, s.b.x), hi(t.a.x, t.b.x));
  const double y0 = std::max(lo(s.a.y, s.b.y), lo(t.a.y, t.b.y));
  const double y1 = std::min(hi(s.a.y, s.b.y), hi(t.a.y, t.b.y));
  if (x0 > x1 + 1e-9 || y0 > y1 + 1e-9) return std::nullopt;
  if (x1 - x0 > 1e-9 || y1 - y0 > 1e-9) {
    overlap = true;
    return std::nullopt;
  }
  return Point{x0, y0};
}

}  // namespace detail

/// Endpoint vertex pair of every route; throws InvalidDrawing on any violated
/// drawing invariant.
inline std::vector<std::pair<int, int>> validate_drawing(const OrthogonalDrawing& d) {
  auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidDrawing, why); };
  for (std::size_t i = 0; i < d.vertices.size(); ++i) {
    if (!detail::is_integer(d.vertices[i].x) || !detail::is_integer(d.vertices[i].y))
      fail("vertex " + std::to_string(i) + " is not on the integer grid");
    if (detail::find_placement(d.vertices, d.vertices[i]) != static_cast<int>(i))
      fail("vertex " + std::to_string(i) + " shares its placement with another vertex");
  }
  if (d.kappa < 0) fail("kappa must be non-negative");
  std::vector<std::pair<int, int>> ends;
  std::vector<int> degree(d.vertices.size(), 0);
  for (std::size_t e = 0; e < d.routes.size(); ++e) {
    const auto& r = d.routes[e];
    const std::string tag = "edge " + std::to_string(e);
    if (r.size() < 2) fail(tag + ": route needs at least two points");
    const int u = detail::find_placement(d.vertices, r.front());
    const int v = detail::find_placement(d.vertices, r.back());
    if (u < 0 || v < 0) fail(tag + ": route endpoints must be vertex placements");
    if (u == v) fail(tag + ": self loop");
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!detail::is_integer(r[j].x) || !detail::is_integer(r[j].y))
        fail(tag + ": point " + std::to_string(j) + " is not on the integer grid");
      if (j > 0 && j + 1 < r.size() && detail::find_placement(d.vertices, r[j]) >= 0)
        fail(tag + ": bend " + std::to_string(j) + " coincides with a vertex");
      if (j + 1 < r.size()) {
        const Point a = r[j], b = r[j + 1];
        const bool horizontal = std::abs(a.y - b.y) <= 1e-9;
        const bool vertical = std::abs(a.x - b.x) <= 1e-9;
        if (horizontal == vertical)
          fail(tag + ": segment " + std::to_string(j) + (horizontal ? " has zero length" : " is not axis-aligned"));
      }
    }
    for (const auto& [a, b] : ends)
      if ((a == u && b == v) || (a == v && b == u)) fail(tag + ": duplicate edge");
    ends.push_back({u, v});
    if (++degree[static_cast<std::size_t>(u)] > 4 || ++degree[static_cast<std::size_t>(v)] > 4)
      fail(tag + ": vertex degree exceeds 4");
  }
  // Segments may meet only at shared route endpoints or consecutive bends.
  struct Seg {
    std::size_t edge, index;
    Segment s;
  };
  std::vector<Seg> segs;
  for (std::size_t e = 0; e < d.routes.size(); ++e)
    for (std::size_t j = 0; j + 1 < d.routes[e].size(); ++j) segs.push_back({e, j, {d.routes[e][j], d.routes[e][j + 1]}});
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t k = 0; k < d.vertices.size(); ++k) {
      const Point p = d.vertices[k];
      if (on_segment(p, segs[i].s.a, segs[i].s.b, 1e-9) && distance(p, segs[i].s.a) > 1e-9 &&
          distance(p, segs[i].s.b) > 1e-9)
        fail("edge " + std::to_string(segs[i].edge) + " passes through vertex " + std::to_string(k));
    }
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      bool overlap = false;
      const auto hit = detail::axis_intersection(segs[i].s, segs[j].s, overlap);
      const std::string tag = "edges " + std::to_string(segs[i].edge) + " and " + std::to_string(segs[j].edge);
      if (overlap) fail(tag + " overlap");
      if (!hit) continue;
      if (segs[i].edge == segs[j].edge) {
        if (segs[j].index == segs[i].index + 1 && distance(*hit, segs[i].s.b) <= 1e-9) continue;
        fail("edge " + std::to_string(segs[i].edge) + " crosses itself");
      }
      const int k = detail::find_placement(d.vertices, *hit);
      const auto [a1, b1] = ends[segs[i].edge];
      const auto [a2, b2] = ends[segs[j].edge];
      const bool shared = k >= 0 && (k == a1 || k == b1) && (k == a2 || k == b2);
      if (!shared) fail(tag + " cross");
    }
  }
  return ends;
}

/// Drawing of the subdivision H: bends and the equal-length pieces of every
/// segment become vertices. Original vertices keep their indices.
struct SubdividedDrawing {
  std::vector<Point> positions;
  std::vector<std::pair<int, int>> edges;
  // Exact length of each H edge as the fraction numerator / denominator.
  std::vector<std::pair<long, long>> edge_lengths;
  std::vector<std::pair<int, int>> graph_edges;  // endpoints of each original edge
  std::vector<int> segment_counts;               // l_uv per original edge
  std::size_t original_vertex_count = 0;
  int kappa = 0;

  /// K(G) = kappa + (1/2) * sum (l_uv - 1).
  int site_budget(int cover_size) const {
    long sum = 0;
    for (int l : segment_counts) sum += l - 1;
    return cover_size + static_cast<int>(sum / 2);
  }
  int site_budget() const { return site_budget(kappa); }
};

/// Splits each route segment of integer length L into 3L or 3L + 1 equal
/// pieces so that every edge has an odd number of pieces; the +1 goes to the
/// last segment of the route.
inline SubdividedDrawing subdivide(const OrthogonalDrawing& d) {
  SubdividedDrawing h;
  h.graph_edges = validate_drawing(d);
  h.positions = d.vertices;
  h.original_vertex_count = d.vertices.size();
  h.kappa = d.kappa;
  for (std::size_t e = 0; e < d.routes.size(); ++e) {
    const auto& r = d.routes[e];
    std::vector<long> lengths, counts;
    long total = 0;
    for (std::size_t j = 0; j + 1 < r.size(); ++j) {
      const long len = std::lround(std::abs(r[j + 1].x - r[j].x) + std::abs(r[j + 1].y - r[j].y));
      lengths.push_back(len);
      counts.push_back(3 * len);
      total += 3 * len;
    }
    if (total % 2 == 0) {
      ++counts.back();
      ++total;
    }
    h.segment_counts.push_back(static_cast<int>(total));
    int prev = h.graph_edges[e].first;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
      for (long i = 1; i <= counts[j]; ++i) {
        int next;
        if (i == counts[j] && j + 1 == lengths.size()) {
          next = h.graph_edges[e].second;
        } else {
          next = static_cast<int>(h.positions.size());
          h.positions.push_back(i == counts[j] ? r[j + 1]
                                               : lerp(r[j], r[j + 1], static_cast<double>(i) / static_cast<double>(counts[j])));
        }
        h.edges.push_back({prev, next});
        h.edge_lengths.push_back({lengths[j], counts[j]});
        prev = next;
      }
    }
  }
  return h;
}

/// The thickened domain P(G) and its bookkeeping.
struct GadgetInstance {
  SubdividedDrawing sub;
  std::optional<PolygonalDomain> domain;  // empty when H has no edges
  double epsilon = kDefaultEpsilon;
  int K = 0;
  double threshold = 0.0;  // 1/3 + 3 epsilon
  // Domain vertex of each corner of S(v), in the order (-e,+e), (+e,+e),
  // (+e,-e), (-e,-e); -1 where the corner is not a domain vertex.
  std::vector<std::array<int, 4>> vertex_map;
};

inline std::array<Point, 4> corner_square(Point c, double eps) {
  return {Point{c.x - eps, c.y + eps}, Point{c.x + eps, c.y + eps}, Point{c.x + eps, c.y - eps},
          Point{c.x - eps, c.y - eps}};
}

namespace detail {

inline std::vector<double> compress(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v)
    if (out.empty() || x - out.back() > 1e-9) out.push_back(x);
  return out;
}

inline std::size_t coord_index(const std::vector<double>& axis, double v) {
  const auto it = std::lower_bound(axis.begin(), axis.end(), v - 1e-9);
  return static_cast<std::size_t>(it - axis.begin());
}

// Boundary cycles of a union of axis-aligned rectangles, each traced with the
// union on its left (outer boundaries counter-clockwise, holes clockwise).
// Rectangle edges are swept into a compressed grid; cells are covered when a
// rectangle spans them.
inline std::vector<std::vector<Point>> rectilinear_union(const std::vector<std::pair<Point, Point>>& rects) {
  std::vector<double> xv, yv;
  for (const auto& [lo, hi] : rects) {
    xv.insert(xv.end(), {lo.x, hi.x});
    yv.insert(yv.end(), {lo.y, hi.y});
  }
  const auto xs = compress(xv), ys = compress(yv);
  const std::size_t nx = xs.size(), ny = ys.size();
  // Sweep over x: each rectangle adds +1 on its y-range while the sweep is
  // between its left and right sides.
  std::vector<std::vector<int>> cover(nx, std::vector<int>(ny, 0));  // cover[i][j]: cell [x_i,x_i+1]x[y_j,y_j+1]
  for (const auto& [lo, hi] : rects) {
    const std::size_t i0 = coord_index(xs, lo.x), i1 = coord_index(xs, hi.x);
    const std::size_t j0 = coord_index(ys, lo.y), j1 = coord_index(ys, hi.y);
    for (std::size_t i = i0; i < i1; ++i)
      for (std::size_t j = j0; j < j1; ++j) ++cover[i][j];
  }
  auto covered = [&](long i, long j) {
    if (i < 0 || j < 0 || i + 1 >= static_cast<long>(nx) || j + 1 >= static_cast<long>(ny)) return false;
    return cover[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0;
  };
  using Node = std::pair<long, long>;
  std::map<Node, std::vector<Node>> out_edges;
  for (long i = 0; i + 1 < static_cast<long>(nx); ++i)
    for (long j = 0; j < static_cast<long>(ny); ++j) {
      const bool above = covered(i, j), below = covered(i, j - 1);
      if (above && !below) out_edges[{i, j}].push_back({i + 1, j});
      if (below && !above) out_edges[{i + 1, j}].push_back({i, j});
    }
  for (long i = 0; i < static_cast<long>(nx); ++i)
    for (long j = 0; j + 1 < static_cast<long>(ny); ++j) {
      const bool right = covered(i, j), left = covered(i - 1, j);
      if (left && !right) out_edges[{i, j}].push_back({i, j + 1});
      if (right && !left) out_edges[{i, j + 1}].push_back({i, j});
    }
  for (const auto& [node, outs] : out_edges)
    if (outs.size() != 1) throw Error(ErrorKind::UnionDegenerate, "rectangles touch at a single corner");

  std::vector<std::vector<Point>> cycles;
  std::map<Node, bool> used;
  for (const auto& [start, outs] : out_edges) {
    if (used[start]) continue;
    std::vector<Node> cyc;
    Node cur = start;
    while (!used[cur]) {
      used[cur] = true;
      cyc.push_back(cur);
      cur = out_edges.at(cur).front();
    }
    // Keep only corners.
    std::vector<Point> ring;
    const std::size_t m = cyc.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Node a = cyc[(k + m - 1) % m], b = cyc[k], c = cyc[(k + 1) % m];
      const long d1x = b.first - a.first, d1y = b.second - a.second;
      const long d2x = c.first - b.first, d2y = c.second - b.second;
      if (d1x * d2y - d1y * d2x != 0)
        ring.push_back({xs[static_cast<std::size_t>(b.first)], ys[static_cast<std::size_t>(b.second)]});
    }
    cycles.push_back(std::move(ring));
  }
  return cycles;
}

}  // namespace detail

/// Thickens every vertex of H into the square S(v) and every edge into the
/// rectangle R(uv) = conv(S(u) u S(v)); P(G) is the union of the rectangles,
/// with every S(v) corner on its boundary kept as a domain vertex.
inline GadgetInstance thicken(const SubdividedDrawing& sub, double epsilon = kDefaultEpsilon) {
  if (!(epsilon > 0) || !(epsilon < kMaxEpsilon))
    throw Error(ErrorKind::EpsilonTooLarge, "epsilon must lie in (0, 1/120)");
  GadgetInstance g;
  g.sub = sub;
  g.epsilon = epsilon;
  g.K = sub.site_budget();
  g.threshold = 1.0 / 3.0 + 3.0 * epsilon;
  g.vertex_map.assign(sub.positions.size(), {-1, -1, -1, -1});
  if (sub.edges.empty()) return g;

  std::vector<std::pair<Point, Point>> rects;
  for (const auto& [a, b] : sub.edges) {
    const Point pa = sub.positions[static_cast<std::size_t>(a)], pb = sub.positions[static_cast<std::size_t>(b)];
    rects.push_back({{std::min(pa.x, pb.x) - epsilon, std::min(pa.y, pb.y) - epsilon},
                     {std::max(pa.x, pb.x) + epsilon, std::max(pa.y, pb.y) + epsilon}});
  }
  const auto cycles = detail::rectilinear_union(rects);

  std::vector<bool> in_graph(sub.positions.size(), false);
  for (const auto& [a, b] : sub.edges) in_graph[static_cast<std::size_t>(a)] = in_graph[static_cast<std::size_t>(b)] = true;
  std::vector<Point> corners;
  for (std::size_t v = 0; v < sub.positions.size(); ++v)
    if (in_graph[v])
      for (const Point& c : corner_square(sub.positions[v], epsilon)) corners.push_back(c);

  // Refine every cycle with the S(v) corners lying on it.
  std::vector<std::vector<Point>> rings;
  for (const auto& cyc : cycles) {
    std::vector<Point> ring;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const Point a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      std::vector<std::pair<double, Point>> on;
      for (const Point& c : corners)
        if (on_segment(c, a, b, 1e-9) && distance(c, b) > 1e-9) on.push_back({distance(a, c), c});
      std::sort(on.begin(), on.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      if (on.empty() || on.front().first > 1e-9)
        throw Error(ErrorKind::UnionDegenerate, "union corner is not a corner of any S(v)");
      for (const auto& [t, c] : on) ring.push_back(c);
    }
    rings.push_back(std::move(ring));
  }
  std::optional<std::size_t> outer;
  for (std::size_t r = 0; r < rings.size(); ++r)
    if (signed_area(rings[r]) > 0) {
      if (outer) throw Error(ErrorKind::UnionDegenerate, "union is disconnected");
      outer = r;
    }
  if (!outer) throw Error(ErrorKind::UnionDegenerate, "union has no outer boundary");
  std::vector<Polygon> holes;
  for (std::size_t r = 0; r < rings.size(); ++r)
    if (r != *outer) holes.emplace_back(rings[r]);
  g.domain.emplace(Polygon(rings[*outer]), std::move(holes));

  const auto& dv = g.domain->vertices();
  for (std::size_t v = 0; v < sub.positions.size(); ++v) {
    if (!in_graph[v]) continue;
    const auto sq = corner_square(sub.positions[v], epsilon);
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t i = 0; i < dv.size(); ++i)
        if (distance(dv[i], sq[c]) <= 1e-9) g.vertex_map[v][c] = static_cast<int>(i);
  }
  return g;
}

/// Smallest vertex cover of a graph on `n` vertices by exhaustive search.
inline std::vector<int> minimum_vertex_cover(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  if (n > 24) throw Error(ErrorKind::TooLarge, "vertex cover search limited to 24 vertices");
  auto covers = [&](const std::vector<int>& c) {
    std::vector<bool> in(n, false);
    for (int v : c) in[static_cast<std::size_t>(v)] = true;
    for (const auto& [a, b] : edges)
      if (!in[static_cast<std::size_t>(a)] && !in[static_cast<std::size_t>(b)]) return false;
    return true;
  };
  for (int size = 0; size <= static_cast<int>(n); ++size) {
    std::vector<int> found;
    for_each_combination(static_cast<int>(n), size, [&](const std::vector<int>& c) {
      if (!covers(c)) return true;
      found = c;
      return false;
    });
    if (!found.empty() || edges.empty()) return found;
  }
  return {};
}

struct GadgetOptions {
  double resolution = 1e-3;
  std::uint64_t enumeration_cap = 20'000;
};

struct GadgetReport {
  int kappa = 0;
  int budget = 0;            // K for this kappa
  double threshold = 0.0;
  double band = 0.0;         // 2 * resolution
  int min_cover_graph = 0;   // vertex cover number of G
  int min_cover_subdivided = 0;
  bool cover_numbers_agree = false;  // (tau(G) <= kappa) == (tau(H) <= K)
  bool vacuous = false;

  // G has a cover of size kappa: the cover's sites burn P(G) in time.
  bool cover_exists = false;
  std::vector<int> forward_sites;
  double forward_burn_time = 0.0;
  bool forward_ok = false;

  // Every budget-sized site set burning within threshold - band collapses to a
  // vertex cover of H.
  bool reverse_exhaustive = false;  // literal enumeration vs. dominance
  std::size_t reverse_sets_checked = 0;
  double best_noncover_time = kInf;
  bool reverse_ok = false;

  bool passed() const { return cover_numbers_agree && forward_ok && reverse_ok; }
};

/// Checks both directions of the equivalence between vertex covers of size
/// kappa and burning P(G) within 1/3 + 3 epsilon with K(G) sites.
///
/// The reverse direction enumerates site sets directly when C(n, K) is within
/// the cap. Otherwise it uses monotonicity: a site set whose collapse misses
/// an edge uv of H lies inside the union of S(w) over some non-cover C of H of
/// size min(K, |V(H)| - 2), so it burns no faster than that union.
inline GadgetReport verify_gadget(const GadgetInstance& g, int kappa, const GadgetOptions& opt = {}) {
  GadgetReport rep;
  const auto& sub = g.sub;
  rep.kappa = kappa;
  rep.budget = sub.site_budget(kappa);
  rep.threshold = g.threshold;
  rep.band = 2.0 * opt.resolution;
  rep.min_cover_graph = static_cast<int>(minimum_vertex_cover(sub.original_vertex_count, sub.graph_edges).size());
  if (sub.edges.empty()) {
    rep.vacuous = rep.cover_numbers_agree = rep.forward_ok = rep.reverse_ok = true;
    rep.cover_exists = true;
    return rep;
  }
  const std::size_t nh = sub.positions.size();
  const auto cover_h = minimum_vertex_cover(nh, sub.edges);
  rep.min_cover_subdivided = static_cast<int>(cover_h.size());
  rep.cover_exists = rep.min_cover_subdivided <= rep.budget;
  rep.cover_numbers_agree = (rep.min_cover_graph <= kappa) == rep.cover_exists;

  const GeodesicIndex index(*g.domain);
  const SampleSet samples(index, opt.resolution);
  const std::size_t nd = index.vertex_count();
  const int budget = std::min<int>(rep.budget, static_cast<int>(nd));

  if (rep.cover_exists) {
    std::vector<bool> used(nd, false);
    for (int v : cover_h) {
      const auto& m = g.vertex_map[static_cast<std::size_t>(v)];
      int pick = m[3];
      for (std::size_t c = 0; pick < 0 && c < 4; ++c) pick = m[c];
      if (pick >= 0 && !used[static_cast<std::size_t>(pick)]) {
        used[static_cast<std::size_t>(pick)] = true;
        rep.forward_sites.push_back(pick);
      }
    }
    for (std::size_t i = 0; i < nd && static_cast<int>(rep.forward_sites.size()) < budget; ++i)
      if (!used[i]) {
        used[i] = true;
        rep.forward_sites.push_back(static_cast<int>(i));
      }
    std::sort(rep.forward_sites.begin(), rep.forward_sites.end());
    rep.forward_burn_time = samples.evaluate(rep.forward_sites).burn_time;
    rep.forward_ok = rep.forward_burn_time <= g.threshold + rep.band;
  } else {
    rep.forward_ok = true;  // nothing to show
  }

  std::vector<int> owner(nd, -1);
  for (std::size_t v = 0; v < nh; ++v)
    for (int i : g.vertex_map[v])
      if (i >= 0) owner[static_cast<std::size_t>(i)] = static_cast<int>(v);
  auto is_cover = [&](const std::vector<bool>& in) {
    for (const auto& [a, b] : sub.edges)
      if (!in[static_cast<std::size_t>(a)] && !in[static_cast<std::size_t>(b)]) return false;
    return true;
  };
  const double limit = g.threshold - rep.band;

  if (budget <= 0) {
    rep.reverse_ok = true;  // no site set can burn anything
  } else if (binomial_capped(nd, static_cast<std::uint64_t>(budget), opt.enumeration_cap) <= opt.enumeration_cap) {
    rep.reverse_exhaustive = true;
    rep.reverse_ok = true;
    for_each_combination(static_cast<int>(nd), budget, [&](const std::vector<int>& s) {
      ++rep.reverse_sets_checked;
      std::vector<bool> in(nh, false);
      for (int i : s)
        if (owner[static_cast<std::size_t>(i)] >= 0) in[static_cast<std::size_t>(owner[static_cast<std::size_t>(i)])] = true;
      if (is_cover(in)) return true;
      const double t = samples.evaluate(s).burn_time;
      rep.best_noncover_time = std::min(rep.best_noncover_time, t);
      if (t <= limit) rep.reverse_ok = false;
      return true;
    });
  } else {
    rep.reverse_ok = true;
    const int m = std::min<int>(budget, static_cast<int>(nh) - 2);
    for_each_combination(static_cast<int>(nh), m, [&](const std::vector<int>& c) {
      std::vector<bool> in(nh, false);
      for (int v : c) in[static_cast<std::size_t>(v)] = true;
      if (is_cover(in)) return true;
      ++rep.reverse_sets_checked;
      std::vector<int> sites;
      for (int v : c)
        for (int i : g.vertex_map[static_cast<std::size_t>(v)])
          if (i >= 0) sites.push_back(i);
      std::sort(sites.begin(), sites.end());
      sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
      const double t = samples.evaluate(sites).burn_time;
      rep.best_noncover_time = std::min(rep.best_noncover_time, t);
      if (t <= limit) rep.reverse_ok = false;
      return true;
    });
  }
  return rep;
}

inline GadgetReport verify_gadget(const GadgetInstance& g, const GadgetOptions& opt = {}) {
  return verify_gadget(g, g.sub.kappa, opt);
}

}  // namespace pburn
