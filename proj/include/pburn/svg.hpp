#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pburn/burn.hpp"

namespace pburn {

struct SvgOptions {
  double width = 640.0;
  double margin = 24.0;
  double shading_resolution = 0.0;  // 0 picks about 120 cells across
};

/// Optional overlays drawn on top of the domain.
struct SvgOverlay {
  std::vector<int> ordering;                     // vertex labels 1..n in this order
  std::vector<std::pair<Point, Point>> chords;  // dashed bisector chords
};

class SvgWriter {
 public:
  SvgWriter(std::pair<Point, Point> box, const SvgOptions& opt) : lo_(box.first), opt_(opt) {
    const double span = std::max({box.second.x - box.first.x, box.second.y - box.first.y, 1e-12});
    scale_ = (opt.width - 2 * opt.margin) / span;
    w_ = (box.second.x - box.first.x) * scale_ + 2 * opt.margin;
    h_ = (box.second.y - box.first.y) * scale_ + 2 * opt.margin;
    hi_y_ = box.second.y;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w_) << "\" height=\"" << num(h_)
         << "\" viewBox=\"0 0 " << num(w_) << ' ' << num(h_) << "\">\n";
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
  }

  double sx(double x) const { return opt_.margin + (x - lo_.x) * scale_; }
  double sy(double y) const { return opt_.margin + (hi_y_ - y) * scale_; }
  double scale() const { return scale_; }

  std::string ring_path(std::span<const Point> ring) const {
    std::string d;
    for (std::size_t i = 0; i < ring.size(); ++i)
      d += (i ? " L" : "M") + num(sx(ring[i].x)) + ' ' + num(sy(ring[i].y));
    return d + " Z";
  }

  void raw(const std::string& s) { out_ << s; }

  void path(const std::string& d, const std::string& cls, const std::string& style) {
    out_ << "<path class=\"" << cls << "\" d=\"" << d << "\" " << style << "/>\n";
  }

  void line(Point a, Point b, const std::string& cls, const std::string& style) {
    out_ << "<line class=\"" << cls << "\" x1=\"" << num(sx(a.x)) << "\" y1=\"" << num(sy(a.y)) << "\" x2=\""
         << num(sx(b.x)) << "\" y2=\"" << num(sy(b.y)) << "\" " << style << "/>\n";
  }

  void circle(Point c, double r, const std::string& cls, const std::string& style) {
    out_ << "<circle class=\"" << cls << "\" cx=\"" << num(sx(c.x)) << "\" cy=\"" << num(sy(c.y)) << "\" r=\""
         << num(r) << "\" " << style << "/>\n";
  }

  void text(Point p, const std::string& s, const std::string& cls) {
    out_ << "<text class=\"" << cls << "\" x=\"" << num(sx(p.x) + 5) << "\" y=\"" << num(sy(p.y) - 5)
         << "\" font-family=\"sans-serif\" font-size=\"12\">" << s << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Point lo_;
  SvgOptions opt_;
  double scale_ = 1.0, w_ = 0.0, h_ = 0.0, hi_y_ = 0.0;
  std::ostringstream out_;
};

inline const char* site_color(std::size_t i) {
  static const char* palette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                  "#42d4f4", "#f032e6", "#bfef45", "#469990", "#9a6324"};
  return palette[i % (sizeof palette / sizeof *palette)];
}

/// Deterministic SVG of a domain with optional burn sites, their burn regions
/// and overlays. Convex hole-free domains get exact Voronoi cells; others are
/// shaded from a sample grid.
inline std::string render_svg(const GeodesicIndex& index, const BurnSolution* solution = nullptr,
                              const SvgOverlay* overlay = nullptr, const SvgOptions& opt = {}) {
  const auto& dom = index.domain();
  const auto box = dom.bounding_box();
  SvgWriter svg(box, opt);

  if (solution && !solution->sites.empty()) {
    const auto& sites = solution->sites;
    if (index.convex()) {
      const auto& poly = dom.outer();
      for (std::size_t i = 0; i < sites.size(); ++i) {
        const Point ps = poly[static_cast<std::size_t>(sites[i])];
        std::vector<Point> cell = poly.vertices();
        for (int t : sites)
          if (t != sites[i] && !cell.empty())
            cell = detail::clip_halfplane(cell, lerp(ps, poly[static_cast<std::size_t>(t)], 0.5),
                                          poly[static_cast<std::size_t>(t)] - ps);
        if (cell.size() >= 3)
          svg.path(svg.ring_path(cell), "region",
                   std::string("fill=\"") + site_color(i) + "\" fill-opacity=\"0.3\" stroke=\"none\"");
      }
    } else {
      double res = opt.shading_resolution;
      if (!(res > 0)) res = std::max(box.second.x - box.first.x, box.second.y - box.first.y) / 120.0;
      const SampleSet samples(index, res);
      const auto owner = samples.nearest_sites(sites);
      const double half = samples.grid_spacing() / 2;
      std::map<int, std::string> paths;
      // Only grid samples are shaded; vertex and boundary samples come first.
      const std::size_t first_grid = dom.vertex_count() + boundary_samples(dom, res).size();
      for (std::size_t p = first_grid; p < samples.size(); ++p) {
        const Point c = samples.points()[p];
        auto& d = paths[owner[p]];
        d += (d.empty() ? "M" : " M") + SvgWriter::num(svg.sx(c.x - half)) + ' ' + SvgWriter::num(svg.sy(c.y + half)) +
             " h" + SvgWriter::num(2 * half * svg.scale()) + " v" + SvgWriter::num(2 * half * svg.scale()) + " h" +
             SvgWriter::num(-2 * half * svg.scale()) + " Z";
      }
      for (std::size_t i = 0; i < sites.size(); ++i)
        svg.path(paths[sites[i]], "region",
                 std::string("fill=\"") + site_color(i) + "\" fill-opacity=\"0.3\" stroke=\"none\"");
    }
  }

  svg.path(svg.ring_path(dom.rings().front()), "boundary", "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"");
  for (std::size_t h = 1; h < dom.rings().size(); ++h)
    svg.path(svg.ring_path(dom.rings()[h]), "hole", "fill=\"#dddddd\" stroke=\"black\" stroke-width=\"1.5\"");

  if (overlay) {
    for (const auto& [a, b] : overlay->chords)
      svg.line(a, b, "chord", "stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  }
  for (std::size_t v = 0; v < dom.vertex_count(); ++v) svg.circle(dom.vertex(v), 2.0, "vertex", "fill=\"black\"");
  if (overlay)
    for (std::size_t i = 0; i < overlay->ordering.size(); ++i)
      svg.text(dom.vertex(static_cast<std::size_t>(overlay->ordering[i])), std::to_string(i + 1), "label");
  if (solution)
    for (std::size_t i = 0; i < solution->sites.size(); ++i)
      svg.circle(dom.vertex(static_cast<std::size_t>(solution->sites[i])), 6.0, "site",
                 std::string("fill=\"none\" stroke=\"") + site_color(i) + "\" stroke-width=\"2\"");
  return svg.finish();
}

inline std::string render_svg(const PolygonalDomain& domain, const BurnSolution* solution = nullptr,
                              const SvgOverlay* overlay = nullptr, const SvgOptions& opt = {}) {
  return render_svg(GeodesicIndex(domain), solution, overlay, opt);
}

}  // namespace pburn
