// sprp: generate instances, solve them, run benchmark grids.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "sprp/bench.hpp"
#include "sprp/oracle.hpp"
#include "sprp/tour.hpp"

using namespace sprp;
namespace fs = std::filesystem;

namespace {

std::vector<Formulation> parse_list(const std::string& s) {
  std::vector<Formulation> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_formulation(item));
  if (out.empty()) throw ValidationError("formulations", "empty list");
  return out;
}

std::string label(const WarehouseGraph& g, VertexId v) {
  const int stride = g.layout().cells_per_subaisle + 1;
  const int t = v % g.vertices_per_aisle();
  const int aisle = g.aisle_of(v);
  if (g.is_intersection(v)) return std::to_string(aisle) + "/x" + std::to_string(t / stride);
  return std::to_string(aisle) + "/" + std::to_string((t / stride) * g.layout().cells_per_subaisle + t % stride - 1);
}

// Keeps the depot, cross intersections and picked cells.
std::string describe_walk(const WarehouseGraph& g, const std::vector<VertexId>& walk,
                          const std::vector<std::pair<int, int>>& cells) {
  std::set<VertexId> picks;
  for (auto [a, c] : cells) picks.insert(g.cell(a, c));
  std::string out;
  VertexId last = -1;
  for (VertexId v : walk) {
    if (!g.is_intersection(v) && !picks.count(v)) continue;
    if (v == last) continue;
    if (!out.empty()) out += " ";
    out += label(g, v);
    last = v;
  }
  return out;
}

struct Common {
  std::string formulations = "GS,CC,EC";
  std::string backend = "highs";
  double time_limit = 60;
  bool toggle_optional = false;
  int workers = 1;
  std::string out_dir = ".";

  FormulationOptions form() const {
    FormulationOptions o;
    if (toggle_optional) {
      o.ec_cross_bound = !o.ec_cross_bound;
      o.ec_edge_pairs = !o.ec_edge_pairs;
    }
    return o;
  }
  SolveLimits limits() const {
    SolveLimits l;
    l.time_limit_s = time_limit;
    return l;
  }
};

void add_common(CLI::App* c, Common& o, bool with_workers) {
  c->add_option("--formulations", o.formulations, "comma-separated subset of GS,CC,EC")->capture_default_str();
  c->add_option("--backend", o.backend, "highs or enumerate")->capture_default_str();
  c->add_option("--time-limit", o.time_limit, "seconds per solve")->capture_default_str();
  c->add_flag("--toggle-optional-constraints", o.toggle_optional,
              "flip the optional edge-model constraints from their defaults");
  c->add_option("--out-dir", o.out_dir)->capture_default_str();
  if (with_workers) c->add_option("--workers", o.workers)->capture_default_str()->check(CLI::PositiveNumber);
}

int cmd_generate(const std::string& grid, std::optional<std::uint64_t> seed, const std::string& out_dir) {
  auto g = load_grid(grid);
  if (seed) g.seed = *seed;
  fs::create_directories(out_dir);
  std::ofstream manifest(fs::path(out_dir) / "manifest.txt");
  int n = 0;
  for (const auto& c : g.configs()) {
    const auto inst = generate(g, c);
    const auto name = id_of(inst) + ".json";
    write_instance(inst, (fs::path(out_dir) / name).string());
    manifest << name << '\n';
    ++n;
  }
  std::cout << "wrote " << n << " instances to " << out_dir << '\n';
  return 0;
}

int cmd_solve(const std::string& path, const Common& o, const std::string& svg, const std::string& lp) {
  const auto inst = read_instance(path);
  const auto& layout = layout_of(inst);
  const auto g = build_graph(layout);
  auto backend = make_backend(o.backend);
  for (Formulation f : parse_list(o.formulations)) {
    if (!supports(f, layout)) {
      std::cout << to_string(f) << ": not defined for this layout\n";
      continue;
    }
    const auto out = solve_instance(inst, f, *backend, o.limits(), o.form());
    const auto n = out.built.model.counts();
    std::cout << to_string(f) << ": " << to_string(out.solution.status);
    if (out.solution.objective) std::cout << " objective " << *out.solution.objective;
    std::cout << " (" << out.solution.wall_ms << " ms, " << n.variables << " vars, " << n.constraints
              << " rows)\n";
    if (!lp.empty()) {
      std::ofstream lf(lp + "." + to_string(f) + ".lp");
      write_lp(out.built.model, lf);
    }
    if (out.solution.status != SolveStatus::optimal) continue;
    const auto sub = extract_subgraph(out.built, out.solution);
    const auto cells = picked_cells(out.built, out.solution.assignment);
    std::cout << "  tour: " << describe_walk(g, euler_tour(sub), cells) << '\n';
    if (!svg.empty()) {
      std::ofstream sf(svg + "." + to_string(f) + ".svg");
      sf << to_svg(sub, cells);
    }
  }
  return 0;
}

// Solves, checks each tour and compares with the exact oracle where it fits.
int cmd_validate(const std::string& path, const Common& o) {
  const auto inst = read_instance(path);
  const auto& layout = layout_of(inst);
  std::optional<Length> want;
  try {
    if (const auto* s = std::get_if<Instance>(&inst)) want = solve_sprp_oracle(*s).objective;
    else want = solve_sprp_ss_oracle(std::get<ScatteredInstance>(inst)).objective;
    std::cout << "oracle: " << *want << '\n';
  } catch (const BudgetExceeded& e) {
    std::cout << "oracle: skipped (" << e.what() << ")\n";
  }
  auto backend = make_backend(o.backend);
  bool ok = true;
  for (Formulation f : parse_list(o.formulations)) {
    if (!supports(f, layout)) continue;
    const auto out = solve_instance(inst, f, *backend, o.limits(), o.form());
    std::cout << to_string(f) << ": ";
    if (out.solution.status != SolveStatus::optimal) {
      std::cout << to_string(out.solution.status) << '\n';
      ok = false;
      continue;
    }
    const auto sub = extract_subgraph(out.built, out.solution);
    const auto rep = validate(sub, picked_cells(out.built, out.solution.assignment));
    const bool match = !want || *want == *out.solution.objective;
    std::cout << *out.solution.objective << (rep.ok() ? " tour ok" : " tour INVALID")
              << (match ? "" : " MISMATCH") << '\n';
    ok = ok && rep.ok() && match;
  }
  return ok ? 0 : 1;
}

int cmd_bench(const std::string& grid, std::optional<std::uint64_t> seed, const Common& c) {
  auto g = load_grid(grid);
  if (seed) g.seed = *seed;
  RunOptions o;
  o.formulations = parse_list(c.formulations);
  o.backend = c.backend;
  o.limits = c.limits();
  o.form = c.form();
  o.workers = c.workers;
  o.out_dir = c.out_dir;
  fs::create_directories(c.out_dir);
  std::ofstream runs(fs::path(c.out_dir) / "runs.csv");
  runs << runs_csv_header() << '\n';
  std::size_t done = 0;
  const auto recs = run_grid(g, o, [&](const RunRecord& r) {
    runs << to_csv_row(r) << '\n' << std::flush;
    if (++done % 100 == 0) std::cerr << done << " runs\n";
  });
  write_summaries(recs, c.out_dir);
  std::cout << recs.size() << " runs written to " << c.out_dir << '\n';
  return 0;
}

int cmd_summarize(const std::vector<std::string>& files, const std::string& out_dir) {
  std::vector<RunRecord> all;
  for (const auto& f : files) {
    auto r = read_runs_csv(f);
    all.insert(all.end(), r.begin(), r.end());
  }
  write_summaries(all, out_dir);
  std::cout << "summaries of " << all.size() << " runs written to " << out_dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-picker routing: models, oracle and benchmarks"};
  app.require_subcommand(1);

  std::string grid, instance, svg, lp;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> csvs;
  Common common;

  auto* gen = app.add_subcommand("generate", "write the instances of a grid");
  gen->add_option("--grid", grid, "preset name or grid JSON file")->required();
  gen->add_option("--seed", seed);
  gen->add_option("--out-dir", common.out_dir)->capture_default_str();

  auto* sol = app.add_subcommand("solve", "solve one instance and print the tour");
  sol->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  sol->add_option("--svg", svg, "write <prefix>.<formulation>.svg");
  sol->add_option("--lp", lp, "write <prefix>.<formulation>.lp");
  add_common(sol, common, false);

  auto* val = app.add_subcommand("validate", "solve one instance, check tours against the oracle");
  val->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  add_common(val, common, false);

  auto* ben = app.add_subcommand("bench", "run a grid and write runs.csv plus summaries");
  ben->add_option("--grid", grid, "preset name or grid JSON file")->required();
  ben->add_option("--seed", seed);
  add_common(ben, common, true);

  auto* sum = app.add_subcommand("summarize", "rebuild summary tables from runs CSV files");
  sum->add_option("runs", csvs)->required()->check(CLI::ExistingFile);
  sum->add_option("--out-dir", common.out_dir)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_generate(grid, seed, common.out_dir);
    if (*sol) return cmd_solve(instance, common, svg, lp);
    if (*val) return cmd_validate(instance, common);
    if (*ben) return cmd_bench(grid, seed, common);
    if (*sum) return cmd_summarize(csvs, common.out_dir);
  } catch (const EqualityViolation& e) {
    std::cerr << "equality violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
