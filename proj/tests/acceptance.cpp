// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--only N[,N...]] [--skip-full-grid] [--workers W]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "sprp/bench.hpp"
#include "sprp/oracle.hpp"
#include "sprp/tour.hpp"

using namespace sprp;

namespace {

// pinned tolerances and sizes
constexpr double integrality_tol = 1e-6;
constexpr double depot_share_tol = 0.02;
constexpr double full_grid_time_limit_s = 60.0;
constexpr int suite1_size = 500;
constexpr int suite2_size = 300;
constexpr int suite3_sprp = 180;
constexpr int suite3_ss = 150;
constexpr int suite3_depot_aisle_only = 40;

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first;
  void fail(const std::string& why) {
    if (!failed++) first = why;
  }
  std::string summary(const std::string& what) const {
    std::ostringstream s;
    s << checked << " " << what;
    if (failed) s << ", " << failed << " failed (first: " << first << ")";
    return s.str();
  }
};

// shared across suites
Tally tours;       // criterion 4
Tally integral;    // criterion 6
long fractional_solves = 0;
Tally dominance;   // criterion 5

void inspect(const AnyInstance& inst, const SolveOutcome& out) {
  const auto& sol = out.solution;
  if (sol.status != SolveStatus::optimal) return;
  const std::string tag = id_of(inst) + "/" + to_string(out.built.formulation);
  ++tours.checked;
  try {
    const auto sub = extract_subgraph(out.built, sol);
    const auto rep = validate(sub, picked_cells(out.built, sol.assignment));
    if (!rep.ok()) {
      tours.fail(tag + " report c=" + std::to_string(rep.connected) + " e=" + std::to_string(rep.even) +
                 " v=" + std::to_string(rep.covers) + " d=" + std::to_string(rep.depot_included));
    } else if (walk_length(sub.layout, euler_tour(sub)) != *sol.objective) {
      tours.fail(tag + " Euler tour length differs from objective");
    }
  } catch (const std::exception& e) {
    tours.fail(tag + " " + e.what());
  }
  if (out.built.formulation == Formulation::EC) {
    const long before = integral.failed;
    for (std::size_t i = 0; i < out.built.roles.size(); ++i) {
      const auto r = out.built.roles[i].role;
      if (r != Role::conn_r && r != Role::conn_rho && r != Role::conn_z) continue;
      ++integral.checked;
      const double v = sol.values[i];
      if (std::abs(v - std::round(v)) > integrality_tol)
        integral.fail(tag + " " + out.built.model.variable(static_cast<int>(i)).name + "=" + std::to_string(v));
    }
    fractional_solves += integral.failed > before;
  }
}

struct Result {
  bool pass;
  std::string detail;
};

Length oracle_of(const AnyInstance& inst) {
  if (const auto* s = std::get_if<Instance>(&inst)) return solve_sprp_oracle(*s).objective;
  return solve_sprp_ss_oracle(std::get<ScatteredInstance>(inst)).objective;
}

// Solves with each formulation and compares against the oracle.
Result exactness(const std::vector<AnyInstance>& insts, const std::vector<Formulation>& forms, Backend& backend,
                 bool check_dominance) {
  Tally t;
  for (const auto& inst : insts) {
    const Length want = oracle_of(inst);
    std::optional<ModelCounts> gs, cc;
    for (Formulation f : forms) {
      ++t.checked;
      const auto out = solve_instance(inst, f, backend);
      inspect(inst, out);
      if (out.solution.status != SolveStatus::optimal) {
        t.fail(id_of(inst) + "/" + to_string(f) + " status " + to_string(out.solution.status));
        continue;
      }
      if (*out.solution.objective != want)
        t.fail(id_of(inst) + "/" + to_string(f) + " " + std::to_string(*out.solution.objective) + " vs oracle " +
               std::to_string(want));
      if (f == Formulation::GS) gs = out.built.model.counts();
      if (f == Formulation::CC) cc = out.built.model.counts();
    }
    if (check_dominance && gs && cc) {
      ++dominance.checked;
      if (!(cc->integer_like() < gs->integer_like() && cc->constraints <= gs->constraints))
        dominance.fail(id_of(inst) + " CC " + std::to_string(cc->integer_like()) + "/" +
                       std::to_string(cc->constraints) + " GS " + std::to_string(gs->integer_like()) + "/" +
                       std::to_string(gs->constraints));
    }
  }
  return {t.failed == 0, t.summary("solves vs oracle")};
}

GeneratorConfig cfg(int alpha, int m, int a, std::uint64_t seed, int replicate, int crosses) {
  GeneratorConfig c;
  c.alpha = alpha;
  c.num_aisles = m;
  c.num_articles = a;
  c.seed = seed;
  c.replicate = replicate;
  c.num_crosses = crosses;
  return c;
}

const std::vector<Formulation> all_forms{Formulation::GS, Formulation::CC, Formulation::EC};

Result criterion1(Backend& backend, bool full_grid, int workers) {
  std::vector<AnyInstance> insts;
  for (int i = 0; i < suite1_size; ++i)
    insts.emplace_back(generate_sprp(cfg(1, 2 + i % 5, 3 + (i / 5) % 8, 1001, i, 2)));
  auto r = exactness(insts, all_forms, backend, true);
  if (!full_grid) return {r.pass, r.detail + "; full grid skipped"};

  RunOptions o;
  o.formulations = {Formulation::CC, Formulation::EC};
  o.limits.time_limit_s = full_grid_time_limit_s;
  o.workers = workers;
  o.out_dir = "acceptance_failures";
  o.inspect = inspect;
  long optimal = 0, total = 0, instances = 0;
  double worst = 0;
  std::string err;
  try {
    const auto recs = run_grid(grid_preset("sprp-single"), o);
    std::set<std::string> ids;
    for (const auto& x : recs) {
      ++total;
      optimal += x.status == "optimal";
      worst = std::max(worst, x.wall_ms);
      ids.insert(x.instance_id);
    }
    instances = static_cast<long>(ids.size());
  } catch (const std::exception& e) {
    err = e.what();
  }
  const bool grid_ok = err.empty() && instances == 1250 && optimal == total;
  std::ostringstream d;
  d << r.detail << "; full grid " << instances << " instances, " << optimal << "/" << total
    << " CC+EC solves optimal, slowest " << static_cast<long>(worst) << " ms";
  if (!err.empty()) d << ", error: " << err;
  return {r.pass && grid_ok, d.str()};
}

Result criterion2(Backend& backend) {
  std::vector<AnyInstance> insts;
  for (int i = 0; i < suite2_size; ++i)
    insts.emplace_back(generate_sprp_ss(cfg(1 + i % 3, 2 + (i / 3) % 3, 2 + (i / 9) % 4, 2002, i, 2)));
  return exactness(insts, all_forms, backend, true);
}

// All picks in the depot aisle of a two-block layout.
Instance depot_aisle_only(int i) {
  std::mt19937_64 rng(3003 + static_cast<std::uint64_t>(i));
  Instance inst;
  inst.layout.num_aisles = 2 + i % 4;
  inst.layout.num_crosses = 3;
  inst.layout.cells_per_subaisle = 45;
  inst.layout.depot_aisle = static_cast<int>(rng() % static_cast<std::uint64_t>(inst.layout.num_aisles));
  inst.layout.depot_cross = rng() % 2 ? 2 : 0;
  inst.required.resize(static_cast<std::size_t>(inst.layout.num_aisles));
  std::set<int> cells;
  const int n = 1 + i % 6;
  // at least one pick in the block away from the depot
  const int far_block = inst.layout.depot_cross == 0 ? 1 : 0;
  cells.insert(far_block * 45 + static_cast<int>(rng() % 45));
  while (static_cast<int>(cells.size()) < n) cells.insert(static_cast<int>(rng() % 90));
  inst.required[static_cast<std::size_t>(inst.layout.depot_aisle)].assign(cells.begin(), cells.end());
  inst.provenance = {{"id", "depot-aisle-" + std::to_string(i)}};
  inst.validate();
  return inst;
}

Result criterion3(Backend& backend) {
  std::vector<AnyInstance> insts;
  for (int i = 0; i < suite3_sprp; ++i) insts.emplace_back(generate_sprp(cfg(1, 2 + i % 4, 1 + (i / 4) % 8, 3003, i, 3)));
  for (int i = 0; i < suite3_depot_aisle_only; ++i) insts.emplace_back(depot_aisle_only(i));
  for (int i = 0; i < suite3_ss; ++i)
    insts.emplace_back(generate_sprp_ss(cfg(1 + i % 3, 2 + (i / 3) % 4, 1 + (i / 12) % 5, 3004, i, 3)));
  return exactness(insts, {Formulation::EC}, backend, false);
}

Result criterion7() {
  // tiny corpus: small layouts solved exactly by enumeration
  EnumerationBackend e;
  FormulationOptions off;
  off.ec_cross_bound = false;
  off.ec_edge_pairs = false;
  Tally t;
  std::uint64_t seed = 7007;
  std::vector<AnyInstance> corpus;
  for (int crosses : {2, 3})
    for (int m = 1; m <= (crosses == 2 ? 3 : 2); ++m)
      for (int picks = 1; picks <= 3; ++picks)
        for (int rep = 0; rep < 3; ++rep) {
          auto c = cfg(1, m, picks, ++seed, rep, crosses);
          c.positions_per_aisle = 4 * (crosses - 1);
          corpus.emplace_back(generate_sprp(c));
        }
  for (int alpha : {1, 2})
    for (int m = 1; m <= 2; ++m)
      for (int a = 1; a <= 2; ++a) {
        auto c = cfg(alpha, m, a, ++seed, 0, 2);
        c.positions_per_aisle = 4;
        corpus.emplace_back(generate_sprp_ss(c));
      }
  for (const auto& inst : corpus) {
    ++t.checked;
    const auto on = solve_instance(inst, Formulation::EC, e);
    const auto no = solve_instance(inst, Formulation::EC, e, {}, off);
    if (on.solution.status != SolveStatus::optimal || no.solution.status != SolveStatus::optimal)
      t.fail(id_of(inst) + " not solved");
    else if (*on.solution.objective != *no.solution.objective)
      t.fail(id_of(inst) + " " + std::to_string(*on.solution.objective) + " vs " +
             std::to_string(*no.solution.objective));
  }
  return {t.failed == 0, t.summary("tiny-corpus EC pairs with and without the optional rows")};
}

Result criterion8(Backend& backend) {
  Tally degen, mono;
  for (int i = 0; i < 60; ++i) {
    const int crosses = i % 3 == 2 ? 3 : 2;
    const auto ss = generate_sprp_ss(cfg(1, 2 + i % 4, 2 + (i / 4) % 5, 8008, i, crosses));
    const auto sprp = induced_unique_instance(ss);
    for (Formulation f : all_forms) {
      if (!supports(f, ss.layout)) continue;
      ++degen.checked;
      const auto a = solve_instance(AnyInstance{ss}, f, backend);
      const auto b = solve_instance(AnyInstance{sprp}, f, backend);
      inspect(ss, a);
      inspect(sprp, b);
      if (!a.solution.objective || !b.solution.objective || *a.solution.objective != *b.solution.objective)
        degen.fail(ss.id() + "/" + to_string(f));
    }
  }
  std::mt19937_64 rng(8009);
  for (int i = 0; i < 60; ++i) {
    const int crosses = i % 3 == 2 ? 3 : 2;
    auto ss = generate_sprp_ss(cfg(1 + i % 3, 2 + i % 3, 2 + (i / 3) % 4, 8010, i, crosses));
    for (Formulation f : all_forms) {
      if (!supports(f, ss.layout)) continue;
      ++mono.checked;
      auto more = ss;
      const auto& h = ss.skus[rng() % ss.skus.size()];
      more.supply.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(ss.layout.num_aisles)),
                             static_cast<int>(rng() % static_cast<std::uint64_t>(ss.layout.cells_per_aisle())), h, 1});
      const auto a = solve_instance(AnyInstance{ss}, f, backend);
      const auto b = solve_instance(AnyInstance{more}, f, backend);
      inspect(ss, a);
      inspect(more, b);
      if (!a.solution.objective || !b.solution.objective || *b.solution.objective > *a.solution.objective)
        mono.fail(ss.id() + "/" + to_string(f));
    }
  }
  return {degen.failed == 0 && mono.failed == 0,
          degen.summary("alpha=1 vs induced SPRP") + "; " + mono.summary("duplicate-supply pairs")};
}

Result criterion9() {
  std::vector<std::string> bad;
  auto spot = [&](std::int64_t a, std::int64_t m, std::int64_t n, std::int64_t alpha, std::int64_t want) {
    if (distinct_sku_count(a, m, n, alpha) != want)
      bad.push_back("xi(" + std::to_string(a) + "," + std::to_string(m) + "," + std::to_string(n) + "," +
                    std::to_string(alpha) + ")");
  };
  spot(10, 25, 90, 3, 750);
  spot(100, 5, 90, 5, 100);
  spot(5, 5, 90, 1, 450);
  spot(25, 25, 90, 5, 450);
  spot(7, 3, 90, 4, 68);

  int top = 0;
  const int draws = 10000;
  for (int r = 0; r < draws; ++r) top += generate_sprp(cfg(1, 5, 1, 9009, r, 2)).layout.depot_on_top();
  const double share = static_cast<double>(top) / draws;
  if (std::abs(share - 0.5) > depot_share_tol) bad.push_back("depot share " + std::to_string(share));

  const auto n1 = grid_preset("sprp-single").configs().size();
  const auto n2 = grid_preset("ss-single").configs().size();
  if (n1 != 1250) bad.push_back("SPRP grid " + std::to_string(n1));
  if (n2 != 6250) bad.push_back("SPRP-SS grid " + std::to_string(n2));

  std::ostringstream d;
  d << "xi spot checks 5, depot top share " << share << " over " << draws << " draws, grids " << n1 << "/" << n2;
  for (const auto& b : bad) d << "; bad " << b;
  return {bad.empty(), d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  bool skip_full_grid = false;
  int workers = 1;
  app.add_option("--only", only, "criteria to run")->delimiter(',');
  app.add_flag("--skip-full-grid", skip_full_grid, "skip the 1250-instance grid of criterion 1");
  app.add_option("--workers", workers, "parallel solves in the full grid");
  CLI11_PARSE(app, argc, argv);
  auto wanted = [&](int c) { return only.empty() || std::find(only.begin(), only.end(), c) != only.end(); };

  HighsBackend highs;
  std::map<int, Result> results;
  auto run = [&](int c, auto fn) {
    if (!wanted(c)) return;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      results[c] = fn();
    } catch (const std::exception& e) {
      results[c] = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "criterion " << c << " finished in " << s << " s\n";
  };
  run(1, [&] { return criterion1(highs, !skip_full_grid, workers); });
  run(2, [&] { return criterion2(highs); });
  run(3, [&] { return criterion3(highs); });
  run(7, [&] { return criterion7(); });
  run(8, [&] { return criterion8(highs); });
  run(9, [&] { return criterion9(); });
  // these aggregate over every solve made above; run one suite when none was selected
  if ((wanted(4) || wanted(6)) && !(wanted(1) || wanted(2) || wanted(3) || wanted(8))) criterion3(highs);
  if (wanted(4)) {
    results[4] = {tours.failed == 0 && tours.checked > 0, tours.summary("optimal solutions extracted and toured")};
  }
  if (wanted(5)) {
    if (!wanted(1) && !wanted(2)) {
      // standalone: size comparison only
      for (int i = 0; i < suite1_size; ++i) {
        const AnyInstance inst = generate_sprp(cfg(1, 2 + i % 5, 3 + (i / 5) % 8, 1001, i, 2));
        const auto gs = build_model(inst, Formulation::GS).model.counts();
        const auto cc = build_model(inst, Formulation::CC).model.counts();
        ++dominance.checked;
        if (!(cc.integer_like() < gs.integer_like() && cc.constraints <= gs.constraints)) dominance.fail(id_of(inst));
      }
    }
    results[5] = {dominance.failed == 0 && dominance.checked > 0, dominance.summary("single-block instances")};
  }
  if (wanted(6)) {
    // Rounded values always pass the exact re-check in solve_instance, so a
    // failure here means the backend returned a fractional point even though
    // an integral completion exists.
    std::ostringstream d;
    d << integral.summary("connectivity values in optimal EC solutions");
    if (integral.failed) d << "; " << fractional_solves << " solves affected, all with an exact integral completion";
    results[6] = {integral.failed == 0 && integral.checked > 0, d.str()};
  }

  bool all = true;
  for (const auto& [c, r] : results) {
    std::cout << "criterion " << c << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
