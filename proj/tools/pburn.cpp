#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pburn/pburn.hpp"

using namespace pburn;

namespace {

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::InvalidPolygon:
    case ErrorKind::InvalidDomain:
    case ErrorKind::InvalidInstance:
    case ErrorKind::InvalidDrawing:
    case ErrorKind::EmptySites:
    case ErrorKind::EpsilonTooLarge:
      return 2;
    case ErrorKind::TooLarge:
      return 3;
    default:
      return 1;
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_text_atomic(out, text);
}

std::vector<int> parse_sites(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ValidationError, "sites: '" + tok + "' is not an integer");
    }
  }
  return out;
}

Json sliceability_json(const SliceabilityReport& r) {
  Json doc;
  doc["convex"] = r.convex;
  doc["sliceable"] = r.sliceable;
  doc["triangles"] = Json::array();
  for (const auto& t : r.triangles.triangles) doc["triangles"].push_back(t);
  doc["circumcenters"] = Json::array();
  for (const auto& c : r.circumcenters)
    doc["circumcenters"].push_back(
        Json{{"triangle", c.triangle}, {"center", {c.center.x, c.center.y}}, {"location", to_string(c.location)}});
  if (r.ordering) doc["ordering"] = *r.ordering;
  return doc;
}

Json gadget_json(const GadgetReport& r) {
  Json doc;
  doc["kappa"] = r.kappa;
  doc["K"] = r.budget;
  doc["threshold"] = r.threshold;
  doc["band"] = r.band;
  doc["vertex_cover_G"] = r.min_cover_graph;
  doc["vertex_cover_H"] = r.min_cover_subdivided;
  doc["cover_numbers_agree"] = r.cover_numbers_agree;
  doc["vacuous"] = r.vacuous;
  doc["cover_exists"] = r.cover_exists;
  if (!r.forward_sites.empty()) {
    doc["forward_sites"] = r.forward_sites;
    doc["forward_burn_time"] = r.forward_burn_time;
  }
  doc["forward_ok"] = r.forward_ok;
  doc["reverse_mode"] = r.reverse_exhaustive ? "exhaustive" : "dominance";
  doc["reverse_sets_checked"] = r.reverse_sets_checked;
  if (r.best_noncover_time != kInf) doc["best_noncover_burn_time"] = r.best_noncover_time;
  doc["reverse_ok"] = r.reverse_ok;
  doc["passed"] = r.passed();
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygon burning: solvers, checks and gadgets"};
  app.require_subcommand(1);

  std::string input, out, method = "brute", sites_arg, methods_arg = "brute,gonzalez,dp";
  int k = 0, n = 8;
  std::uint64_t seed = 1;
  double resolution = kDefaultResolution, epsilon = kDefaultEpsilon, gadget_res = 1e-3;
  bool all_starts = false, sliceable = false, timing = false, with_ordering = false, with_chords = false;
  int kappa = -1;
  std::uint64_t cap = 1'000'000;

  auto* solve = app.add_subcommand("solve", "Minimum-burn-time site set");
  solve->add_option("instance", input, "Instance JSON")->required();
  solve->add_option("--method", method, "brute|gonzalez|dp|dp1d")
      ->check(CLI::IsMember({"brute", "gonzalez", "dp", "dp1d"}));
  solve->add_option("--k", k, "Number of sites (overrides the file)");
  solve->add_option("--resolution", resolution, "Sampling resolution for non-convex domains");
  solve->add_option("--cap", cap, "Enumeration cap for brute force");
  solve->add_flag("--all-starts", all_starts, "Run farthest-first from every vertex");
  solve->add_option("--out", out, "Output file");

  auto* check = app.add_subcommand("check-sliceable", "Sliceability report");
  check->add_option("instance", input)->required();
  check->add_option("--out", out);

  auto* ordering = app.add_subcommand("ordering", "Voronoi path ordering of a sliceable polygon");
  ordering->add_option("instance", input)->required();
  ordering->add_option("--out", out);

  auto* eval = app.add_subcommand("eval", "Burn time of a given site set");
  eval->add_option("instance", input)->required();
  eval->add_option("--sites", sites_arg, "Comma-separated vertex indices")->required();
  eval->add_option("--resolution", resolution);
  eval->add_option("--out", out);

  auto* gadget = app.add_subcommand("gadget", "Hardness gadget construction");
  gadget->require_subcommand(1);
  auto* gbuild = gadget->add_subcommand("build", "Thicken a drawing into a domain");
  gbuild->add_option("drawing", input)->required();
  gbuild->add_option("--epsilon", epsilon);
  gbuild->add_option("--out", out, "Output prefix (writes PREFIX.json and PREFIX.sidecar.json)")->required();
  auto* gverify = gadget->add_subcommand("verify", "Check both directions of the reduction");
  gverify->add_option("drawing", input)->required();
  gverify->add_option("--epsilon", epsilon);
  gverify->add_option("--kappa", kappa, "Cover size (defaults to the drawing's kappa)");
  gverify->add_option("--resolution", gadget_res);
  gverify->add_option("--out", out);

  auto* render = app.add_subcommand("render", "SVG of a domain and optional sites");
  render->add_option("instance", input)->required();
  render->add_option("--sites", sites_arg, "Comma-separated vertex indices");
  render->add_option("--method", method, "Solve first with this method")
      ->check(CLI::IsMember({"brute", "gonzalez", "dp"}));
  render->add_option("--k", k);
  render->add_option("--resolution", resolution);
  render->add_flag("--ordering", with_ordering, "Label vertices by their path ordering");
  render->add_flag("--chords", with_chords, "Draw bisector chords of crossing Voronoi edges");
  render->add_option("--out", out);

  auto* bench = app.add_subcommand("bench", "Run methods over a corpus directory");
  bench->add_option("corpus", input)->required();
  bench->add_option("--methods", methods_arg, "Comma-separated methods");
  bench->add_option("--k", k);
  bench->add_option("--resolution", resolution);
  bench->add_option("--cap", cap);
  bench->add_flag("--timing", timing, "Fill the wall_ms column");
  bench->add_option("--out", out);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_flag("--sliceable", sliceable, "Sliceable polygon (otherwise any convex polygon)");
  gen->add_option("--n", n);
  gen->add_option("--seed", seed);
  gen->add_option("--k", k);
  gen->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    SolverOptions sopt;
    sopt.resolution = resolution;
    sopt.enumeration_cap = cap;
    sopt.gonzalez_all_starts = all_starts;
    const std::optional<int> k_override = k > 0 ? std::optional<int>(k) : std::nullopt;

    if (*solve) {
      if (method == "dp1d") {
        OneDimInstance inst = parse_one_dim(read_text(input));
        if (k_override) inst = OneDimInstance(inst.positions, *k_override);
        emit(solution_to_json(solve_dp_1d(inst)).dump(2) + "\n", out);
        return 0;
      }
      const auto doc = parse_instance_document(read_text(input));
      const BurnInstance inst = doc.instance(k_override);
      const GeodesicIndex index(inst.domain);
      emit(solution_to_json(run_method(method, inst, index, sopt)).dump(2) + "\n", out);
    } else if (*check) {
      const auto doc = parse_instance_document(read_text(input));
      if (doc.domain.hole_count() != 0) throw Error(ErrorKind::NotSliceable, "domain has holes");
      emit(sliceability_json(is_sliceable(doc.domain.outer())).dump(2) + "\n", out);
    } else if (*ordering) {
      const auto doc = parse_instance_document(read_text(input));
      if (doc.domain.hole_count() != 0) throw Error(ErrorKind::NotSliceable, "domain has holes");
      const auto rep = is_sliceable(doc.domain.outer());
      if (!rep.sliceable) throw Error(ErrorKind::NotSliceable, "polygon is not sliceable");
      emit(Json{{"ordering", *rep.ordering}}.dump() + "\n", out);
    } else if (*eval) {
      const auto doc = parse_instance_document(read_text(input));
      const GeodesicIndex index(doc.domain);
      const BurnEvaluator evaluator(index, resolution);
      try {
        emit(solution_to_json(evaluator.solution(parse_sites(sites_arg), Method::manual)).dump(2) + "\n", out);
      } catch (const Error& e) {
        throw Error(ErrorKind::ValidationError, std::string("sites: ") + e.what());
      }
    } else if (*gbuild) {
      const GadgetInstance g = thicken(subdivide(parse_drawing(read_text(input))), epsilon);
      if (!g.domain) throw Error(ErrorKind::InvalidDrawing, "drawing has no edges");
      write_text_atomic(out + ".json", serialize_instance(*g.domain, g.K));
      write_text_atomic(out + ".sidecar.json", serialize_sidecar(g));
    } else if (*gverify) {
      const GadgetInstance g = thicken(subdivide(parse_drawing(read_text(input))), epsilon);
      GadgetOptions gopt;
      gopt.resolution = gadget_res;
      const GadgetReport rep = verify_gadget(g, kappa >= 0 ? kappa : g.sub.kappa, gopt);
      emit(gadget_json(rep).dump(2) + "\n", out);
      return rep.passed() ? 0 : 1;
    } else if (*render) {
      const auto doc = parse_instance_document(read_text(input));
      const GeodesicIndex index(doc.domain);
      std::optional<BurnSolution> sol;
      if (!sites_arg.empty()) {
        sol = BurnEvaluator(index, resolution).solution(parse_sites(sites_arg), Method::manual);
      } else if (render->count("--method")) {
        sol = run_method(method, doc.instance(k_override), index, sopt);
      }
      SvgOverlay overlay;
      if ((with_ordering || with_chords) && doc.domain.hole_count() == 0) {
        const auto rep = is_sliceable(doc.domain.outer());
        if (with_ordering && rep.ordering) overlay.ordering = *rep.ordering;
        if (with_chords && rep.convex)
          for (const auto& [u, v] : crossing_voronoi_edges(doc.domain.outer(), delaunay(doc.domain.outer().vertices())))
            overlay.chords.push_back(bisector_chord(doc.domain.vertex(static_cast<std::size_t>(u)),
                                                    doc.domain.vertex(static_cast<std::size_t>(v)), doc.domain.outer()));
      }
      emit(render_svg(index, sol ? &*sol : nullptr, &overlay), out);
    } else if (*bench) {
      BenchOptions bopt;
      bopt.methods.clear();
      std::stringstream ss(methods_arg);
      for (std::string m; std::getline(ss, m, ',');)
        if (!m.empty()) bopt.methods.push_back(m);
      bopt.k = k_override;
      bopt.solver = sopt;
      bopt.timing = timing;
      const auto csv = to_csv(run_bench(input, bopt));
      emit(csv, out);
    } else if (*gen) {
      const Polygon poly = sliceable ? generate_sliceable(n, seed) : random_convex_polygon(n, seed);
      emit(serialize_instance(PolygonalDomain(poly), k_override, seed), out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
