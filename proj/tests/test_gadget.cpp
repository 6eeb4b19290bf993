#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pburn/pburn.hpp"

using namespace pburn;

namespace {

OrthogonalDrawing single_edge(double length = 1) { return {{{0, 0}, {length, 0}}, {{{0, 0}, {length, 0}}}, 1}; }

OrthogonalDrawing four_cycle() {
  return {{{0, 0}, {1, 0}, {1, 1}, {0, 1}},
          {{{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}, {{0, 1}, {0, 0}}},
          2};
}

OrthogonalDrawing star() {
  return {{{1, 1}, {0, 1}, {2, 1}, {1, 0}}, {{{1, 1}, {0, 1}}, {{1, 1}, {2, 1}}, {{1, 1}, {1, 0}}}, 1};
}

// Monotone staircase route with random integer run lengths.
OrthogonalDrawing staircase(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 4), runs(1, 5);
  std::vector<Point> route{{0, 0}};
  const int n = runs(rng);
  for (int i = 0; i < n; ++i) {
    Point p = route.back();
    (i % 2 == 0 ? p.x : p.y) += len(rng);
    route.push_back(p);
  }
  return {{route.front(), route.back()}, {route}, 1};
}

ErrorKind drawing_error(const OrthogonalDrawing& d) {
  try {
    validate_drawing(d);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Subdivide, Examples) {
  auto h = subdivide(single_edge());
  EXPECT_EQ(h.segment_counts, (std::vector<int>{3}));
  EXPECT_EQ(h.edges.size(), 3u);
  EXPECT_EQ(h.positions.size(), 4u);
  EXPECT_EQ(h.site_budget(), 2);
  EXPECT_NEAR(h.positions[2].x, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(h.positions[3].x, 2.0 / 3.0, 1e-15);

  h = subdivide(single_edge(2));
  EXPECT_EQ(h.segment_counts, (std::vector<int>{7}));
  for (const auto& [num, den] : h.edge_lengths) EXPECT_EQ(std::pair(num, den), std::pair(2L, 7L));

  h = subdivide({{{0, 0}, {1, 1}}, {{{0, 0}, {1, 0}, {1, 1}}}, 1});
  EXPECT_EQ(h.segment_counts, (std::vector<int>{7}));
  ASSERT_EQ(h.edge_lengths.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(h.edge_lengths[i].second, i < 3 ? 3 : 4);
  EXPECT_EQ(h.site_budget(), 1 + 3);
}

TEST(Subdivide, EdgeLengthBoundsAndOddCounts) {
  std::mt19937_64 rng(4);
  std::vector<OrthogonalDrawing> drawings{single_edge(), single_edge(5), four_cycle(), star()};
  for (int i = 0; i < 100; ++i) drawings.push_back(staircase(rng));
  for (const auto& d : drawings) {
    const auto h = subdivide(d);
    for (const auto& [num, den] : h.edge_lengths) {
      // 1/4 <= num/den <= 1/3 in integers.
      EXPECT_LE(3 * num, den);
      EXPECT_LE(den, 4 * num);
    }
    long sum = 0;
    for (int l : h.segment_counts) {
      EXPECT_EQ(l % 2, 1);
      sum += l - 1;
    }
    EXPECT_EQ(sum % 2, 0);
    EXPECT_EQ(h.site_budget(), d.kappa + sum / 2);
    // Every H edge has its exact length.
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      const auto [a, b] = h.edges[e];
      const double len = distance(h.positions[static_cast<std::size_t>(a)], h.positions[static_cast<std::size_t>(b)]);
      EXPECT_NEAR(len, static_cast<double>(h.edge_lengths[e].first) / static_cast<double>(h.edge_lengths[e].second), 1e-12);
    }
  }
}

TEST(Thicken, SingleEdgeIsOneRectangle) {
  const auto g = thicken(subdivide(single_edge()));
  ASSERT_TRUE(g.domain.has_value());
  const double e = kDefaultEpsilon;
  EXPECT_EQ(g.domain->hole_count(), 0u);
  const auto [lo, hi] = g.domain->bounding_box();
  EXPECT_NEAR(lo.x, -e, 1e-15);
  EXPECT_NEAR(hi.x, 1 + e, 1e-15);
  EXPECT_NEAR(hi.y - lo.y, 2 * e, 1e-15);
  EXPECT_NEAR(g.domain->outer().area(), (1 + 2 * e) * 2 * e, 1e-12);
  EXPECT_EQ(g.K, 2);
  EXPECT_NEAR(g.threshold, 1.0 / 3.0 + 3 * e, 1e-15);
  EXPECT_EQ(g.domain->vertex_count(), 16u);
  // Every corner of every S(v) is a domain vertex at the right place.
  ASSERT_EQ(g.vertex_map.size(), 4u);
  for (std::size_t v = 0; v < 4; ++v) {
    const auto corners = corner_square(g.sub.positions[v], e);
    for (std::size_t c = 0; c < 4; ++c) {
      ASSERT_GE(g.vertex_map[v][c], 0);
      EXPECT_EQ(g.domain->vertex(static_cast<std::size_t>(g.vertex_map[v][c])), corners[c]);
    }
  }
}

TEST(Thicken, FourCycleIsAnnulus) {
  const auto g = thicken(subdivide(four_cycle()));
  ASSERT_TRUE(g.domain.has_value());
  EXPECT_EQ(g.domain->hole_count(), 1u);
  const double e = kDefaultEpsilon;
  EXPECT_NEAR(g.domain->outer().area(), (1 + 2 * e) * (1 + 2 * e), 1e-12);
  EXPECT_NEAR(-signed_area(g.domain->rings()[1]), (1 - 2 * e) * (1 - 2 * e), 1e-12);
  EXPECT_EQ(g.K, 2 + 4);
  EXPECT_EQ(g.domain->vertex_count(), 48u);
}

TEST(Thicken, StaircaseKeepsEveryCorner) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto g = thicken(subdivide(staircase(rng)));
    ASSERT_TRUE(g.domain.has_value());
    EXPECT_EQ(g.domain->hole_count(), 0u);
    // Each H vertex contributes its 4 corners; nothing else is a vertex.
    EXPECT_EQ(g.domain->vertex_count(), 4 * g.sub.positions.size());
  }
}

TEST(Thicken, EpsilonTooLarge) {
  for (double eps : {1.0 / 120, 0.01, 0.1}) {
    try {
      thicken(subdivide(single_edge()), eps);
      ADD_FAILURE() << eps;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::EpsilonTooLarge);
    }
  }
  EXPECT_NO_THROW(thicken(subdivide(single_edge()), 1.0 / 121));
}

TEST(Thicken, EmptyGraphHasNoDomain) {
  const auto g = thicken(subdivide({{{0, 0}, {3, 0}}, {}, 0}));
  EXPECT_FALSE(g.domain.has_value());
  EXPECT_EQ(g.K, 0);
}

TEST(ValidateDrawing, Rejections) {
  EXPECT_EQ(drawing_error({{{0, 0}, {1, 1}}, {{{0, 0}, {1, 1}}}, 1}), ErrorKind::InvalidDrawing);
  EXPECT_EQ(drawing_error({{{0, 0}, {0.5, 0}}, {{{0, 0}, {0.5, 0}}}, 1}), ErrorKind::InvalidDrawing);
  EXPECT_EQ(drawing_error({{{0, 0}, {0, 0}}, {}, 1}), ErrorKind::InvalidDrawing);
  EXPECT_EQ(drawing_error({{{0, 0}, {2, 0}}, {{{0, 0}, {3, 0}}}, 1}), ErrorKind::InvalidDrawing);
  EXPECT_EQ(drawing_error({{{0, 0}, {1, 0}, {2, 0}}, {{{0, 0}, {2, 0}}}, 1}), ErrorKind::InvalidDrawing);
  EXPECT_EQ(drawing_error({{{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}}, 1}), ErrorKind::InvalidDrawing);
  EXPECT_EQ(drawing_error({{{0, 0}, {1, 0}}, {{{0, 0}, {1, 0}}}, -1}), ErrorKind::InvalidDrawing);
  // Two edges crossing away from any vertex.
  EXPECT_EQ(drawing_error({{{0, 1}, {2, 1}, {1, 0}, {1, 2}}, {{{0, 1}, {2, 1}}, {{1, 0}, {1, 2}}}, 1}),
            ErrorKind::InvalidDrawing);
  // Overlapping collinear routes.
  EXPECT_EQ(drawing_error({{{0, 0}, {3, 0}, {1, 1}, {2, 1}},
                           {{{0, 0}, {3, 0}}, {{1, 1}, {1, 0}, {2, 0}, {2, 1}}},
                           1}),
            ErrorKind::InvalidDrawing);
  // Degree 5.
  OrthogonalDrawing deg5{{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 2}}, {}, 1};
  for (int v = 1; v <= 4; ++v) deg5.routes.push_back({{0, 0}, deg5.vertices[static_cast<std::size_t>(v)]});
  EXPECT_NO_THROW(validate_drawing(deg5));
  deg5.routes.push_back({{0, 0}, {2, 0}, {2, 2}});
  EXPECT_EQ(drawing_error(deg5), ErrorKind::InvalidDrawing);
  EXPECT_NO_THROW(validate_drawing(four_cycle()));
  EXPECT_NO_THROW(validate_drawing(star()));
}

TEST(VertexCover, Exhaustive) {
  EXPECT_EQ(minimum_vertex_cover(2, {{0, 1}}).size(), 1u);
  EXPECT_EQ(minimum_vertex_cover(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}).size(), 2u);
  EXPECT_EQ(minimum_vertex_cover(4, {{0, 1}, {0, 2}, {0, 3}}), (std::vector<int>{0}));
  EXPECT_EQ(minimum_vertex_cover(3, {}).size(), 0u);
  EXPECT_EQ(minimum_vertex_cover(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}).size(), 3u);
  EXPECT_THROW(minimum_vertex_cover(25, {}), Error);
}

TEST(VerifyGadget, SingleEdgeBothDirections) {
  const auto g = thicken(subdivide(single_edge()));
  const auto rep = verify_gadget(g, 1);
  EXPECT_EQ(rep.budget, 2);
  EXPECT_EQ(rep.min_cover_graph, 1);
  EXPECT_EQ(rep.min_cover_subdivided, 2);
  EXPECT_TRUE(rep.cover_exists);
  EXPECT_TRUE(rep.reverse_exhaustive);
  EXPECT_EQ(rep.reverse_sets_checked, 120u);
  EXPECT_LE(rep.forward_burn_time, rep.threshold + rep.band);
  EXPECT_GT(rep.best_noncover_time, rep.threshold - rep.band);
  EXPECT_TRUE(rep.passed());
}

TEST(VerifyGadget, SingleEdgeWithoutCoverBudget) {
  const auto g = thicken(subdivide(single_edge()));
  const auto rep = verify_gadget(g, 0);
  EXPECT_EQ(rep.budget, 1);
  EXPECT_FALSE(rep.cover_exists);
  EXPECT_GT(rep.best_noncover_time, g.threshold);
  EXPECT_TRUE(rep.passed());
  // Independent singleton check: no vertex burns the rectangle in time.
  const GeodesicIndex index(*g.domain);
  for (int v = 0; v < static_cast<int>(index.vertex_count()); ++v)
    EXPECT_GT(burn_time_sampled(index, std::vector<int>{v}, 1e-3).burn_time, g.threshold);
}

TEST(VerifyGadget, EmptyGraphIsVacuous) {
  const auto g = thicken(subdivide({{{0, 0}}, {}, 0}));
  const auto rep = verify_gadget(g, 0);
  EXPECT_TRUE(rep.vacuous);
  EXPECT_TRUE(rep.passed());
}

TEST(VerifyGadget, Star) {
  const auto g = thicken(subdivide(star()));
  const auto rep = verify_gadget(g);
  EXPECT_EQ(rep.budget, 4);
  EXPECT_EQ(rep.min_cover_graph, 1);
  EXPECT_TRUE(rep.passed());
}
