#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "pburn/burn.hpp"

namespace pburn {

struct SolverOptions {
  double resolution = kDefaultResolution;
  std::uint64_t enumeration_cap = 1'000'000;
  bool gonzalez_all_starts = false;
  double tolerance = 1e-9;
};

/// C(n, k), saturating at `cap + 1` so callers can compare against the cap.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

/// Calls fn on every k-subset of {0..n-1} in lexicographic order; stops early
/// if fn returns false.
inline void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!fn(c)) return;
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace detail {

inline void check_enumeration(std::size_t n, int k, std::uint64_t cap) {
  if (binomial_capped(n, static_cast<std::uint64_t>(k), cap) > cap)
    throw Error(ErrorKind::TooLarge, "C(" + std::to_string(n) + ", " + std::to_string(k) +
                                         ") exceeds the enumeration cap of " + std::to_string(cap));
}

}  // namespace detail

/// Minimum burn time over all k-subsets of vertices; the lexicographically
/// smallest subset wins ties.
inline BurnSolution solve_bruteforce(const BurnInstance& inst, const GeodesicIndex& index,
                                     const SolverOptions& opt = {}) {
  const std::size_t n = index.vertex_count();
  detail::check_enumeration(n, inst.k, opt.enumeration_cap);
  const BurnEvaluator eval(index, opt.resolution);
  double best = kInf;
  std::vector<int> best_sites;
  for_each_combination(static_cast<int>(n), inst.k, [&](const std::vector<int>& c) {
    const double t = eval(c).burn_time;
    if (t < best - 1e-12) {
      best = t;
      best_sites = c;
    }
    return true;
  });
  return eval.solution(best_sites, Method::brute_force);
}

inline BurnSolution solve_bruteforce(const BurnInstance& inst, const SolverOptions& opt = {}) {
  return solve_bruteforce(inst, GeodesicIndex(inst.domain), opt);
}

/// Farthest-first traversal on the vertex set under the geodesic metric.
inline std::vector<int> gonzalez_centers(const DistanceMatrix& d, int k, int first = 0) {
  const std::size_t n = d.size();
  std::vector<int> centers{first};
  std::vector<double> near(n);
  for (std::size_t v = 0; v < n; ++v) near[v] = d(static_cast<std::size_t>(first), v);
  std::vector<bool> chosen(n, false);
  chosen[static_cast<std::size_t>(first)] = true;
  while (static_cast<int>(centers.size()) < k) {
    int far = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (!chosen[v] && (far < 0 || near[v] > near[static_cast<std::size_t>(far)])) far = static_cast<int>(v);
    centers.push_back(far);
    chosen[static_cast<std::size_t>(far)] = true;
    for (std::size_t v = 0; v < n; ++v) near[v] = std::min(near[v], d(static_cast<std::size_t>(far), v));
  }
  return centers;
}

inline BurnSolution solve_gonzalez(const BurnInstance& inst, const GeodesicIndex& index,
                                   const SolverOptions& opt = {}) {
  const BurnEvaluator eval(index, opt.resolution);
  const auto& d = index.vertex_distances();
  BurnSolution best = eval.solution(gonzalez_centers(d, inst.k, 0), Method::gonzalez);
  if (opt.gonzalez_all_starts) {
    for (int s = 1; s < static_cast<int>(index.vertex_count()); ++s) {
      BurnSolution cand = eval.solution(gonzalez_centers(d, inst.k, s), Method::gonzalez);
      if (cand.burn_time < best.burn_time - 1e-12) best = std::move(cand);
    }
  }
  return best;
}

inline BurnSolution solve_gonzalez(const BurnInstance& inst, const SolverOptions& opt = {}) {
  return solve_gonzalez(inst, GeodesicIndex(inst.domain), opt);
}

struct TrivialBoundsReport {
  double diameter = 0.0;
  double opt = 0.0;
  double diameter_bound = 0.0;  // 2k * opt
  double max_singleton = 0.0;
  int max_singleton_vertex = -1;
  bool diameter_ok = false;
  bool singletons_ok = false;
  bool passed() const { return diameter_ok && singletons_ok; }
};

/// diam(P) <= 2k * opt, and any single vertex burns P within diam(P).
inline TrivialBoundsReport check_trivial_bounds(const BurnInstance& inst, const GeodesicIndex& index,
                                                const BurnSolution& optimal, const SolverOptions& opt = {}) {
  TrivialBoundsReport r;
  r.opt = optimal.burn_time;
  r.diameter = diameter_estimate(index, opt.resolution);
  r.diameter_bound = 2.0 * inst.k * r.opt;
  r.diameter_ok = r.diameter <= r.diameter_bound + opt.tolerance;
  const BurnEvaluator eval(index, opt.resolution);
  for (int v = 0; v < static_cast<int>(index.vertex_count()); ++v) {
    const double t = eval(std::vector<int>{v}).burn_time;
    if (t > r.max_singleton) {
      r.max_singleton = t;
      r.max_singleton_vertex = v;
    }
  }
  r.singletons_ok = r.max_singleton <= r.diameter + 2.0 * opt.resolution + opt.tolerance;
  return r;
}

struct SandwichReport {
  double radius = 0.0;        // exact discrete k-center radius of the vertices
  std::vector<int> centers;   // an optimal k-center
  double opt = 0.0;           // brute-force burn time
  double centers_burn_time = 0.0;
  bool radius_below_opt = false;
  bool centers_within_twice_opt = false;
  bool passed() const { return radius_below_opt && centers_within_twice_opt; }
};

/// Exact discrete k-center radius over the vertex distance matrix.
inline std::pair<double, std::vector<int>> exact_kcenter(const DistanceMatrix& d, int k, std::uint64_t cap) {
  const std::size_t n = d.size();
  detail::check_enumeration(n, k, cap);
  double best = kInf;
  std::vector<int> best_c;
  for_each_combination(static_cast<int>(n), k, [&](const std::vector<int>& c) {
    double radius = 0.0;
    for (std::size_t v = 0; v < n && radius < best; ++v) {
      double near = kInf;
      for (int s : c) near = std::min(near, d(v, static_cast<std::size_t>(s)));
      radius = std::max(radius, near);
    }
    if (radius < best - 1e-12) {
      best = radius;
      best_c = c;
    }
    return true;
  });
  return {best, best_c};
}

/// r <= opt and t_C(P) <= 2 opt for an optimal discrete k-center C.
inline SandwichReport kcenter_sandwich_check(const BurnInstance& inst, const GeodesicIndex& index,
                                             const SolverOptions& opt = {}) {
  SandwichReport r;
  std::tie(r.radius, r.centers) = exact_kcenter(index.vertex_distances(), inst.k, opt.enumeration_cap);
  r.opt = solve_bruteforce(inst, index, opt).burn_time;
  const BurnEvaluator eval(index, opt.resolution);
  r.centers_burn_time = eval(r.centers).burn_time;
  r.radius_below_opt = r.radius <= r.opt + opt.tolerance;
  r.centers_within_twice_opt = r.centers_burn_time <= 2.0 * r.opt + opt.tolerance;
  return r;
}

}  // namespace pburn
