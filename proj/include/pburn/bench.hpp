#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pburn/io.hpp"
#include "pburn/sliceable.hpp"
#include "pburn/solvers.hpp"

namespace pburn {

/// One solver invocation on one instance.
struct RunRecord {
  std::string instance;
  std::string method;
  std::optional<int> k;
  std::optional<double> burn_time;
  std::vector<int> sites;
  std::string evaluator;
  std::optional<double> resolution;
  std::optional<double> wall_ms;
  std::optional<double> ratio;  // burn_time / brute-force optimum
  std::string status = "ok";
};

struct BenchOptions {
  std::vector<std::string> methods{"brute", "gonzalez", "dp"};
  std::optional<int> k;  // overrides the k stored in each file
  SolverOptions solver;
  bool timing = false;  // wall_ms is left empty otherwise so output is reproducible
};

inline const char* kBenchHeader = "instance,method,k,burn_time,sites,evaluator,resolution,wall_ms,ratio,status";

inline std::string csv_row(const RunRecord& r) {
  auto opt_num = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  std::string sites;
  for (std::size_t i = 0; i < r.sites.size(); ++i) sites += (i ? " " : "") + std::to_string(r.sites[i]);
  std::string wall;
  if (r.wall_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.wall_ms);
    wall = buf;
  }
  return r.instance + ',' + r.method + ',' + (r.k ? std::to_string(*r.k) : "") + ',' + opt_num(r.burn_time) + ',' +
         sites + ',' + r.evaluator + ',' + opt_num(r.resolution) + ',' + wall + ',' + opt_num(r.ratio) + ',' + r.status;
}

inline std::string to_csv(const std::vector<RunRecord>& records) {
  std::string out = std::string(kBenchHeader) + "\n";
  for (const auto& r : records) out += csv_row(r) + "\n";
  return out;
}

inline BurnSolution run_method(const std::string& method, const BurnInstance& inst, const GeodesicIndex& index,
                               const SolverOptions& opt) {
  if (method == "brute") return solve_bruteforce(inst, index, opt);
  if (method == "gonzalez") return solve_gonzalez(inst, index, opt);
  if (method == "dp") {
    if (inst.domain.hole_count() != 0) throw Error(ErrorKind::NotSliceable, "domain has holes");
    return solve_dp_sliceable(inst.domain.outer(), inst.k);
  }
  throw Error(ErrorKind::ValidationError, "unknown method '" + method + "'");
}

/// Runs every method on every *.json instance in `dir` (sorted by name).
/// Failures are recorded in the status column and the run continues. A
/// "__summary__" row per method reports the largest ratio to brute force.
inline std::vector<RunRecord> run_bench(const std::filesystem::path& dir, const BenchOptions& opt = {}) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(dir))
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<RunRecord> records;
  std::map<std::string, double> worst;
  for (const auto& file : files) {
    const std::string id = file.stem().string();
    std::optional<InstanceDocument> doc;
    std::optional<BurnInstance> inst;
    std::optional<GeodesicIndex> index;
    try {
      doc = parse_instance_document(read_text(file));
      inst = doc->instance(opt.k);
      index.emplace(inst->domain);
    } catch (const Error& e) {
      RunRecord r;
      r.instance = id;
      r.method = "-";
      r.status = to_string(e.kind());
      records.push_back(r);
      continue;
    }
    std::optional<double> brute;
    std::vector<RunRecord> rows;
    for (const auto& m : opt.methods) {
      RunRecord r;
      r.instance = id;
      r.method = m;
      r.k = inst->k;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const BurnSolution s = run_method(m, *inst, *index, opt.solver);
        const auto t1 = std::chrono::steady_clock::now();
        r.burn_time = s.burn_time;
        r.sites = s.sites;
        r.evaluator = to_string(s.evaluator);
        r.resolution = s.resolution;
        if (opt.timing) r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (m == "brute") brute = s.burn_time;
      } catch (const Error& e) {
        r.status = to_string(e.kind());
      }
      rows.push_back(r);
    }
    for (auto& r : rows) {
      if (brute && r.burn_time && *brute > 0) {
        r.ratio = *r.burn_time / *brute;
        worst[r.method] = std::max(worst[r.method], *r.ratio);
      }
      records.push_back(r);
    }
  }
  for (const auto& m : opt.methods) {
    if (!worst.count(m)) continue;
    RunRecord r;
    r.instance = "__summary__";
    r.method = m;
    r.ratio = worst[m];
    records.push_back(r);
  }
  return records;
}

inline void write_bench(const std::filesystem::path& out, const std::vector<RunRecord>& records) {
  write_text_atomic(out, to_csv(records));
}

}  // namespace pburn
