#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pburn/gadget.hpp"
#include "pburn/sliceable.hpp"

namespace pburn {

using Json = nlohmann::ordered_json;

/// Decimal text with 17 significant digits.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// A domain file: outer ring, holes, optional budget and generator seed.
struct InstanceDocument {
  PolygonalDomain domain;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;

  BurnInstance instance(std::optional<int> override_k = std::nullopt) const {
    const auto budget = override_k ? override_k : k;
    if (!budget) throw Error(ErrorKind::ValidationError, "k: missing (give it in the file or on the command line)");
    try {
      return BurnInstance(domain, *budget);
    } catch (const Error& e) {
      throw Error(ErrorKind::ValidationError, std::string("k: ") + e.what());
    }
  }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

[[noreturn]] inline void invalid(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::ValidationError, field + ": " + why);
}

inline const Json& require(const Json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) invalid(path + key, "missing");
  return obj.at(key);
}

inline void check_version(const Json& doc) {
  if (!doc.is_object()) invalid("document", "expected a JSON object");
  if (!doc.contains("version")) return;
  const Json& v = doc.at("version");
  if (!v.is_number_integer() || v.get<long>() != 1) invalid("version", "only version 1 is supported");
}

inline double number(const Json& j, const std::string& field) {
  if (!j.is_number()) invalid(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) invalid(field, "not finite");
  return v;
}

inline int integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) invalid(field, "expected an integer");
  return j.get<int>();
}

inline Point point(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) invalid(field, "expected [x, y]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

inline std::vector<Point> ring(const Json& j, const std::string& field) {
  if (!j.is_array()) invalid(field, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline Polygon polygon(const Json& j, const std::string& field) {
  auto pts = ring(j, field);
  try {
    return Polygon(std::move(pts));
  } catch (const Error& e) {
    invalid(field, e.what());
  }
}

inline Json point_json(Point p) {
  return Json::array({p.x, p.y});
}

inline Json ring_json(std::span<const Point> pts) {
  Json a = Json::array();
  for (const Point& p : pts) a.push_back(point_json(p));
  return a;
}

inline bool is_drawing(const Json& doc) { return doc.is_object() && doc.contains("vertices") && !doc.contains("outer"); }

}  // namespace detail

inline InstanceDocument instance_from_json(const Json& doc) {
  detail::check_version(doc);
  Polygon outer = detail::polygon(detail::require(doc, "outer", ""), "outer");
  std::vector<Polygon> holes;
  if (doc.contains("holes")) {
    const Json& hs = doc.at("holes");
    if (!hs.is_array()) detail::invalid("holes", "expected an array of rings");
    for (std::size_t h = 0; h < hs.size(); ++h) holes.push_back(detail::polygon(hs[h], "holes[" + std::to_string(h) + "]"));
  }
  InstanceDocument out{[&] {
    try {
      return PolygonalDomain(std::move(outer), std::move(holes));
    } catch (const Error& e) {
      detail::invalid("holes", e.what());
    }
  }(), std::nullopt, std::nullopt};
  if (doc.contains("k") && !doc.at("k").is_null()) {
    const int k = detail::integer(doc.at("k"), "k");
    if (k < 1 || static_cast<std::size_t>(k) > out.domain.vertex_count())
      detail::invalid("k", "must lie in [1, " + std::to_string(out.domain.vertex_count()) + "]");
    out.k = k;
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) detail::invalid("seed", "expected a non-negative integer");
    out.seed = doc.at("seed").get<std::uint64_t>();
  }
  return out;
}

inline OrthogonalDrawing drawing_from_json(const Json& doc) {
  detail::check_version(doc);
  OrthogonalDrawing d;
  d.vertices = detail::ring(detail::require(doc, "vertices", ""), "vertices");
  const Json& edges = detail::require(doc, "edges", "");
  if (!edges.is_array()) detail::invalid("edges", "expected an array");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string field = "edges[" + std::to_string(e) + "]";
    if (!edges[e].is_object()) detail::invalid(field, "expected an object with a route");
    d.routes.push_back(detail::ring(detail::require(edges[e], "route", field + "."), field + ".route"));
  }
  d.kappa = doc.contains("kappa") ? detail::integer(doc.at("kappa"), "kappa") : 0;
  try {
    validate_drawing(d);
  } catch (const Error& e) {
    detail::invalid("edges", e.what());
  }
  return d;
}

inline InstanceDocument parse_instance_document(const std::string& text) { return instance_from_json(detail::parse_json(text)); }
inline OrthogonalDrawing parse_drawing(const std::string& text) { return drawing_from_json(detail::parse_json(text)); }

/// Either kind of input document, told apart by its keys.
inline std::variant<InstanceDocument, OrthogonalDrawing> parse_instance(const std::string& text) {
  const Json doc = detail::parse_json(text);
  if (detail::is_drawing(doc)) return drawing_from_json(doc);
  return instance_from_json(doc);
}

inline Json instance_to_json(const PolygonalDomain& domain, std::optional<int> k = std::nullopt,
                             std::optional<std::uint64_t> seed = std::nullopt) {
  Json doc;
  doc["version"] = 1;
  doc["outer"] = detail::ring_json(domain.outer().vertices());
  doc["holes"] = Json::array();
  for (const Polygon& h : domain.holes()) doc["holes"].push_back(detail::ring_json(h.vertices()));
  if (k) doc["k"] = *k;
  if (seed) doc["seed"] = *seed;
  return doc;
}

inline std::string serialize_instance(const PolygonalDomain& domain, std::optional<int> k = std::nullopt,
                                      std::optional<std::uint64_t> seed = std::nullopt) {
  return instance_to_json(domain, k, seed).dump(2) + "\n";
}

inline std::string serialize_instance(const InstanceDocument& doc) { return serialize_instance(doc.domain, doc.k, doc.seed); }

inline std::string serialize_drawing(const OrthogonalDrawing& d) {
  Json doc;
  doc["version"] = 1;
  doc["vertices"] = detail::ring_json(d.vertices);
  doc["edges"] = Json::array();
  for (const auto& r : d.routes) doc["edges"].push_back(Json{{"route", detail::ring_json(r)}});
  doc["kappa"] = d.kappa;
  return doc.dump(2) + "\n";
}

/// Gadget metadata: epsilon, K, threshold and the S(v) corner indices keyed
/// by vertex of H.
inline std::string serialize_sidecar(const GadgetInstance& g) {
  Json doc;
  doc["epsilon"] = g.epsilon;
  doc["K"] = g.K;
  doc["kappa"] = g.sub.kappa;
  doc["threshold"] = g.threshold;
  Json map = Json::object();
  for (std::size_t v = 0; v < g.vertex_map.size(); ++v) map[std::to_string(v)] = g.vertex_map[v];
  doc["vertex_map"] = map;
  return doc.dump(2) + "\n";
}

inline OneDimInstance parse_one_dim(const std::string& text) {
  const Json doc = detail::parse_json(text);
  detail::check_version(doc);
  const Json& pos = detail::require(doc, "positions", "");
  if (!pos.is_array()) detail::invalid("positions", "expected an array of numbers");
  std::vector<double> xs;
  for (std::size_t i = 0; i < pos.size(); ++i) xs.push_back(detail::number(pos[i], "positions[" + std::to_string(i) + "]"));
  const int k = detail::integer(detail::require(doc, "k", ""), "k");
  try {
    return OneDimInstance(std::move(xs), k);
  } catch (const Error& e) {
    detail::invalid("positions", e.what());
  }
}

inline std::string serialize_one_dim(const OneDimInstance& inst) {
  Json doc;
  doc["version"] = 1;
  doc["positions"] = Json::array();
  for (double x : inst.positions) doc["positions"].push_back(x);
  doc["k"] = inst.k;
  return doc.dump(2) + "\n";
}

inline Json solution_to_json(const BurnSolution& s) {
  Json doc;
  doc["method"] = to_string(s.method);
  doc["sites"] = s.sites;
  doc["burn_time"] = s.burn_time;
  doc["evaluator"] = to_string(s.evaluator);
  doc["resolution"] = s.resolution;
  if (s.detail.witness_site >= 0) {
    doc["witness"] = detail::point_json(s.detail.witness);
    doc["witness_site"] = s.detail.witness_site;
  }
  return doc;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to a sibling temporary file and renames it over `path`.
inline void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace pburn
