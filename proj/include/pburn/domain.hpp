#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pburn/geometry.hpp"

namespace pburn {

/// Outer boundary plus holes. Vertices are indexed globally: the outer ring
/// (counter-clockwise) first, then each hole ring (clockwise) in order.
class PolygonalDomain {
 public:
  PolygonalDomain() = default;

  explicit PolygonalDomain(Polygon outer, std::vector<Polygon> holes = {})
      : outer_(std::move(outer)), holes_(std::move(holes)) {
    validate();
    rings_.push_back(outer_.vertices());
    for (const Polygon& h : holes_) {
      auto ring = h.vertices();
      std::reverse(ring.begin(), ring.end());
      rings_.push_back(std::move(ring));
    }
    for (std::size_t r = 0; r < rings_.size(); ++r) {
      ring_offset_.push_back(vertices_.size());
      const auto& ring = rings_[r];
      for (std::size_t i = 0; i < ring.size(); ++i) {
        vertices_.push_back(ring[i]);
        edges_.push_back({ring[i], ring[(i + 1) % ring.size()]});
      }
    }
  }

  const Polygon& outer() const { return outer_; }
  /// Holes as counter-clockwise polygons (their rings() entry is clockwise).
  const std::vector<Polygon>& holes() const { return holes_; }
  const std::vector<std::vector<Point>>& rings() const { return rings_; }
  std::size_t ring_offset(std::size_t ring) const { return ring_offset_[ring]; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t hole_count() const { return holes_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Segment>& edges() const { return edges_; }

  bool is_convex_simple() const { return holes_.empty() && outer_.is_convex(); }

  Location locate(Point p) const {
    const Location lo = point_in_polygon(p, outer_);
    if (lo == Location::outside) return Location::outside;
    bool on_boundary = lo == Location::boundary;
    for (const Polygon& h : holes_) {
      const Location lh = point_in_polygon(p, h);
      if (lh == Location::inside) return Location::outside;
      if (lh == Location::boundary) on_boundary = true;
    }
    return on_boundary ? Location::boundary : Location::inside;
  }

  bool contains(Point p) const { return locate(p) != Location::outside; }

  std::pair<Point, Point> bounding_box() const { return outer_.bounding_box(); }

 private:
  void validate() const {
    auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidDomain, why); };
    for (std::size_t h = 0; h < holes_.size(); ++h) {
      const Polygon& hole = holes_[h];
      for (std::size_t i = 0; i < hole.size(); ++i) {
        if (point_in_polygon(hole[i], outer_) != Location::inside)
          fail("hole " + std::to_string(h) + " vertex " + std::to_string(i) +
               " is not strictly inside the outer ring");
        const Segment e = hole.edge(i);
        for (std::size_t j = 0; j < outer_.size(); ++j) {
          const Segment f = outer_.edge(j);
          if (segments_intersect(e.a, e.b, f.a, f.b))
            fail("hole " + std::to_string(h) + " edge " + std::to_string(i) +
                 " touches the outer ring");
        }
      }
      for (std::size_t g = 0; g < h; ++g) {
        const Polygon& other = holes_[g];
        if (point_in_polygon(hole[0], other) != Location::outside ||
            point_in_polygon(other[0], hole) != Location::outside)
          fail("holes " + std::to_string(g) + " and " + std::to_string(h) + " overlap");
        for (std::size_t i = 0; i < hole.size(); ++i)
          for (std::size_t j = 0; j < other.size(); ++j) {
            const Segment e = hole.edge(i), f = other.edge(j);
            if (segments_intersect(e.a, e.b, f.a, f.b))
              fail("holes " + std::to_string(g) + " and " + std::to_string(h) + " intersect");
          }
      }
    }
  }

  Polygon outer_;
  std::vector<Polygon> holes_;
  std::vector<std::vector<Point>> rings_;
  std::vector<std::size_t> ring_offset_;
  std::vector<Point> vertices_;
  std::vector<Segment> edges_;
};

}  // namespace pburn
