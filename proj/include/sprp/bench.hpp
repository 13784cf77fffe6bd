#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "sprp/enumerate.hpp"
#include "sprp/form_cc.hpp"
#include "sprp/form_ec.hpp"
#include "sprp/form_gs.hpp"
#include "sprp/generator.hpp"
#include "sprp/highs_backend.hpp"

namespace sprp {

inline std::unique_ptr<Backend> make_backend(const std::string& id) {
  if (id == "highs") return std::make_unique<HighsBackend>();
  if (id == "enumerate") return std::make_unique<EnumerationBackend>();
  throw ValidationError("backend", "unknown backend '" + id + "'");
}

inline bool supports(Formulation f, const Layout& l) { return f == Formulation::EC || !l.two_block(); }

inline const Layout& layout_of(const AnyInstance& inst) {
  return std::visit([](const auto& i) -> const Layout& { return i.layout; }, inst);
}
inline std::string id_of(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return i.id(); }, inst);
}

inline BuiltModel build_model(const AnyInstance& inst, Formulation f, const FormulationOptions& opt = {}) {
  if (const auto* s = std::get_if<Instance>(&inst)) {
    switch (f) {
      case Formulation::GS: return build_gs_sprp(*s);
      case Formulation::CC: return build_cc_sprp(*s);
      case Formulation::EC: return build_ec_sprp(*s, opt);
    }
  }
  const auto& ss = std::get<ScatteredInstance>(inst);
  switch (f) {
    case Formulation::GS: return build_gs_sprp_ss(ss);
    case Formulation::CC: return build_cc_sprp_ss(ss);
    case Formulation::EC: return build_ec_sprp_ss(ss, opt);
  }
  throw InternalError("unreachable formulation");
}

struct SolveOutcome {
  BuiltModel built;
  MipSolution solution;
  double build_ms = 0;
};

inline SolveOutcome solve_instance(const AnyInstance& inst, Formulation f, Backend& backend,
                                   const SolveLimits& limits = {}, const FormulationOptions& opt = {}) {
  SolveOutcome out;
  const auto t0 = std::chrono::steady_clock::now();
  out.built = build_model(inst, f, opt);
  out.build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.solution = solve(out.built.model, backend, limits);
  if (out.solution.status == SolveStatus::optimal && !out.solution.objective)
    throw InternalError(to_string(f) + std::string(" solution of ") + id_of(inst) +
                        " fails the exact re-check: " + out.solution.check);
  return out;
}

// ---- grids ----

struct GridSpec {
  std::string name = "custom";
  std::string kind = "sprp";  // or "sprp-ss"
  std::vector<int> alphas{1};
  std::vector<int> aisles;
  std::vector<int> articles;
  int replicates = 50;
  int num_crosses = 2;
  int positions_per_aisle = 90;
  std::uint64_t seed = 1;
  std::vector<TurnoverClass> class_profile = default_class_profile();

  bool scattered() const { return kind == "sprp-ss"; }

  std::vector<GeneratorConfig> configs() const {
    if (kind != "sprp" && kind != "sprp-ss") throw ValidationError("kind", "must be sprp or sprp-ss");
    std::vector<GeneratorConfig> out;
    const std::vector<int> as = scattered() ? alphas : std::vector<int>{1};
    for (int a : as)
      for (int m : aisles)
        for (int p : articles)
          for (int r = 0; r < replicates; ++r) {
            GeneratorConfig c;
            c.alpha = a;
            c.num_aisles = m;
            c.num_articles = p;
            c.positions_per_aisle = positions_per_aisle;
            c.num_crosses = num_crosses;
            c.seed = seed;
            c.replicate = r;
            c.class_profile = class_profile;
            c.validate();
            out.push_back(c);
          }
    return out;
  }
};

inline std::vector<int> range_step(int from, int to, int step) {
  std::vector<int> v;
  for (int x = from; x <= to; x += step) v.push_back(x);
  return v;
}

inline GridSpec grid_preset(const std::string& name) {
  GridSpec g;
  g.name = name;
  g.aisles = range_step(5, 25, 5);
  g.articles = range_step(5, 25, 5);
  if (name == "sprp-single") return g;
  if (name == "ss-single") {
    g.kind = "sprp-ss";
    g.alphas = range_step(1, 5, 1);
    return g;
  }
  if (name == "sprp-two") {
    g.num_crosses = 3;
    return g;
  }
  if (name == "ss-two") {
    g.kind = "sprp-ss";
    g.alphas = range_step(1, 5, 1);
    g.num_crosses = 3;
    return g;
  }
  if (name == "desk" || name == "desk-ss" || name == "desk-two") {
    g.aisles = range_step(2, 6, 1);
    g.articles = range_step(3, 8, 1);
    g.replicates = 20;
    if (name == "desk-ss") {
      g.kind = "sprp-ss";
      g.alphas = {1, 2, 3};
      g.aisles = range_step(2, 4, 1);
      g.articles = range_step(2, 5, 1);
    }
    if (name == "desk-two") g.num_crosses = 3;
    return g;
  }
  throw ValidationError("grid", "unknown grid preset '" + name + "'");
}

inline GridSpec grid_from_json(const nlohmann::json& j) {
  GridSpec g = j.contains("preset") ? grid_preset(j.at("preset").get<std::string>()) : GridSpec{};
  auto opt = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  opt("name", g.name);
  opt("kind", g.kind);
  opt("alphas", g.alphas);
  opt("aisles", g.aisles);
  opt("articles", g.articles);
  opt("replicates", g.replicates);
  opt("num_crosses", g.num_crosses);
  opt("positions_per_aisle", g.positions_per_aisle);
  opt("seed", g.seed);
  if (j.contains("class_profile")) {
    g.class_profile.clear();
    for (const auto& c : j.at("class_profile"))
      g.class_profile.push_back({c.at("name").get<std::string>(), c.at("share").get<double>(),
                                 c.at("weight").get<double>()});
  }
  if (g.aisles.empty() || g.articles.empty()) throw ParseError("grid: aisles and articles must be given");
  return g;
}

inline GridSpec load_grid(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(arg + ": " + e.what());
    }
    return grid_from_json(j);
  }
  return grid_preset(arg);
}

inline AnyInstance generate(const GridSpec& g, const GeneratorConfig& c) {
  if (g.scattered()) return generate_sprp_ss(c);
  return generate_sprp(c);
}

// ---- runs ----

struct RunRecord {
  std::string instance_id;
  std::string kind;
  std::string formulation;
  std::string backend;
  std::string status;
  std::optional<Coef> objective;
  double wall_ms = 0;
  double build_ms = 0;
  ModelCounts size;
  int alpha = 1;
  int aisles = 0;
  int articles = 0;
  int crosses = 2;
};

struct RunOptions {
  std::vector<Formulation> formulations{Formulation::GS, Formulation::CC, Formulation::EC};
  std::string backend = "highs";
  SolveLimits limits;
  FormulationOptions form;
  int workers = 1;
  std::string out_dir = ".";
  // called for every solve, one call at a time
  std::function<void(const AnyInstance&, const SolveOutcome&)> inspect;
};

class EqualityViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::vector<RunRecord> run_instance(const GridSpec& g, const GeneratorConfig& c, const RunOptions& o,
                                           Backend& backend) {
  const AnyInstance inst = generate(g, c);
  std::vector<RunRecord> out;
  for (Formulation f : o.formulations) {
    if (!supports(f, c.layout())) continue;
    const auto res = solve_instance(inst, f, backend, o.limits, o.form);
    if (o.inspect) {
      static std::mutex inspect_mu;
      std::lock_guard lk(inspect_mu);
      o.inspect(inst, res);
    }
    RunRecord r;
    r.instance_id = id_of(inst);
    r.kind = g.kind;
    r.formulation = to_string(f);
    r.backend = backend.id();
    r.status = to_string(res.solution.status);
    if (res.solution.status == SolveStatus::optimal) r.objective = res.solution.objective;
    // microsecond resolution, so runs.csv round-trips exactly
    r.wall_ms = std::round(res.solution.wall_ms * 1000) / 1000;
    r.build_ms = std::round(res.build_ms * 1000) / 1000;
    r.size = res.built.model.counts();
    r.alpha = c.alpha;
    r.aisles = c.num_aisles;
    r.articles = c.num_articles;
    r.crosses = c.num_crosses;
    out.push_back(std::move(r));
  }
  std::optional<Coef> ref;
  for (const auto& r : out) {
    if (!r.objective) continue;
    if (ref && *ref != *r.objective) {
      std::filesystem::create_directories(o.out_dir);
      const auto path = (std::filesystem::path(o.out_dir) / ("violation_" + id_of(inst) + ".json")).string();
      write_instance(inst, path);
      std::ostringstream msg;
      msg << "objective mismatch on " << id_of(inst) << ":";
      for (const auto& x : out) msg << " " << x.formulation << "=" << (x.objective ? std::to_string(*x.objective) : x.status);
      msg << " (instance written to " << path << ")";
      throw EqualityViolation(msg.str());
    }
    ref = r.objective;
  }
  return out;
}

// Solves every grid instance with every selected formulation. Records reach
// `sink` in completion order under a lock; the returned vector is sorted by
// grid order.
inline std::vector<RunRecord> run_grid(const GridSpec& g, const RunOptions& o,
                                       const std::function<void(const RunRecord&)>& sink = {}) {
  const auto configs = g.configs();
  std::vector<std::vector<RunRecord>> slots(configs.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    auto backend = make_backend(o.backend);
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      {
        std::lock_guard lk(mu);
        if (failure) return;
      }
      try {
        auto recs = run_instance(g, configs[i], o, *backend);
        std::lock_guard lk(mu);
        if (sink)
          for (const auto& r : recs) sink(r);
        slots[i] = std::move(recs);
      } catch (...) {
        std::lock_guard lk(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const int n = std::max(1, o.workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<RunRecord> all;
  for (auto& s : slots)
    for (auto& r : s) all.push_back(std::move(r));
  return all;
}

// ---- CSV ----

inline const char* runs_csv_header() {
  return "instance_id,kind,formulation,backend,status,objective,wall_ms,build_ms,variables,binaries,integers,"
         "continuous,constraints,alpha,aisles,articles,crosses";
}

inline std::string to_csv_row(const RunRecord& r) {
  std::ostringstream s;
  s << r.instance_id << ',' << r.kind << ',' << r.formulation << ',' << r.backend << ',' << r.status << ','
    << (r.objective ? std::to_string(*r.objective) : "") << ',' << std::fixed << std::setprecision(3) << r.wall_ms
    << ',' << r.build_ms << ','
    << r.size.variables << ',' << r.size.binaries << ',' << r.size.integers << ',' << r.size.continuous << ','
    << r.size.constraints << ',' << r.alpha << ',' << r.aisles << ',' << r.articles << ',' << r.crosses;
  return s.str();
}

inline std::vector<RunRecord> read_runs_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::string line;
  std::getline(in, line);
  if (line != runs_csv_header()) throw ParseError(path + ":1: unexpected header");
  std::vector<RunRecord> out;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() == 16 && line.back() == ',') f.emplace_back();
    if (f.size() != 17) throw ParseError(path + ":" + std::to_string(lineno) + ": expected 17 fields");
    try {
      RunRecord r;
      r.instance_id = f[0];
      r.kind = f[1];
      r.formulation = f[2];
      r.backend = f[3];
      r.status = f[4];
      if (!f[5].empty()) r.objective = std::stoll(f[5]);
      r.wall_ms = std::stod(f[6]);
      r.build_ms = std::stod(f[7]);
      r.size.variables = std::stoi(f[8]);
      r.size.binaries = std::stoi(f[9]);
      r.size.integers = std::stoi(f[10]);
      r.size.continuous = std::stoi(f[11]);
      r.size.constraints = std::stoi(f[12]);
      r.alpha = std::stoi(f[13]);
      r.aisles = std::stoi(f[14]);
      r.articles = std::stoi(f[15]);
      r.crosses = std::stoi(f[16]);
      out.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": malformed number");
    }
  }
  return out;
}

// ---- summaries ----

struct RuntimeStats {
  double mean = 0;
  double median = 0;
  double geomean = 0;
  int solved = 0;
  int count = 0;
};

inline RuntimeStats runtime_stats(const std::vector<double>& times, int solved) {
  RuntimeStats s;
  s.count = static_cast<int>(times.size());
  s.solved = solved;
  if (times.empty()) return s;
  std::vector<double> t = times;
  std::sort(t.begin(), t.end());
  double sum = 0;
  for (double x : t) sum += x;
  s.mean = sum / static_cast<double>(t.size());
  const std::size_t n = t.size();
  s.median = n % 2 ? t[n / 2] : (t[n / 2 - 1] + t[n / 2]) / 2;
  double logsum = 0;
  int pos = 0;
  for (double x : t)
    if (x > 0) {
      logsum += std::log(x);
      ++pos;
    }
  s.geomean = pos ? std::exp(logsum / pos) : 0;
  return s;
}

// rows: group value; columns: formulation
struct SummaryTable {
  std::string key;  // overall | alpha | aisles | articles
  std::vector<std::string> formulations;
  std::map<int, std::map<std::string, RuntimeStats>> rows;
};

inline std::vector<std::string> formulation_columns(const std::vector<RunRecord>& recs) {
  std::vector<std::string> cols;
  for (const char* f : {"GS", "CC", "EC"})
    if (std::any_of(recs.begin(), recs.end(), [&](const RunRecord& r) { return r.formulation == f; }))
      cols.emplace_back(f);
  return cols;
}

inline SummaryTable summarize(const std::vector<RunRecord>& recs, const std::string& key) {
  if (recs.empty()) throw ValidationError("records", "nothing to summarize");
  for (const auto& r : recs)
    if (r.crosses != recs.front().crosses || r.kind != recs.front().kind)
      throw ValidationError("records", "runs from different layouts or problem kinds in one summary");
  auto group = [&](const RunRecord& r) {
    if (key == "overall") return 0;
    if (key == "alpha") return r.alpha;
    if (key == "aisles") return r.aisles;
    if (key == "articles") return r.articles;
    throw ValidationError("key", "unknown grouping '" + key + "'");
  };
  SummaryTable t;
  t.key = key;
  t.formulations = formulation_columns(recs);
  std::map<int, std::map<std::string, std::pair<std::vector<double>, int>>> acc;
  for (const auto& r : recs) {
    auto& [times, solved] = acc[group(r)][r.formulation];
    times.push_back(r.wall_ms);
    if (r.status == "optimal") ++solved;
  }
  for (auto& [g, per] : acc)
    for (auto& [f, v] : per) t.rows[g][f] = runtime_stats(v.first, v.second);
  return t;
}

inline void write_overall_csv(const SummaryTable& t, std::ostream& out) {
  out << "metric";
  for (const auto& f : t.formulations) out << ',' << f;
  out << '\n';
  const auto& row = t.rows.begin()->second;
  auto line = [&](const char* name, auto get) {
    out << name;
    for (const auto& f : t.formulations) {
      auto it = row.find(f);
      out << ',';
      if (it != row.end()) out << get(it->second);
    }
    out << '\n';
  };
  line("mean_ms", [](const RuntimeStats& s) { return s.mean; });
  line("median_ms", [](const RuntimeStats& s) { return s.median; });
  line("geomean_ms", [](const RuntimeStats& s) { return s.geomean; });
  line("solved", [](const RuntimeStats& s) { return s.solved; });
  line("instances", [](const RuntimeStats& s) { return s.count; });
}

// One row per parameter value, mean runtime per formulation.
inline void write_grouped_csv(const SummaryTable& t, std::ostream& out) {
  out << t.key;
  for (const auto& f : t.formulations) out << ',' << f;
  out << '\n';
  for (const auto& [g, per] : t.rows) {
    out << g;
    for (const auto& f : t.formulations) {
      out << ',';
      auto it = per.find(f);
      if (it != per.end()) out << it->second.mean;
    }
    out << '\n';
  }
}

inline void write_summaries(const std::vector<RunRecord>& recs, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path d(dir);
  {
    std::ofstream f(d / "summary_overall.csv");
    write_overall_csv(summarize(recs, "overall"), f);
  }
  for (const char* key : {"alpha", "aisles", "articles"}) {
    std::ofstream f(d / (std::string("summary_by_") + key + ".csv"));
    write_grouped_csv(summarize(recs, key), f);
  }
}

}  // namespace sprp
