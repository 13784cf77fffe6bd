#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace sprp;
using namespace sprp::testing;

namespace {

std::vector<Coef> assignment_of(const BuiltModel& bm, const std::vector<std::pair<std::string, Coef>>& values) {
  std::vector<Coef> x(static_cast<std::size_t>(bm.model.num_variables()), 0);
  for (const auto& [name, v] : values) {
    const auto id = bm.model.find(name);
    REQUIRE(id);
    x[static_cast<std::size_t>(*id)] = v;
  }
  return x;
}

}  // namespace

TEST_CASE("branch expands to a doubled run from the depot cross") {
  Instance inst;
  inst.layout.num_aisles = 1;
  inst.required = {{2}};
  inst.validate();
  const auto bm = build_cc_sprp(inst);
  const auto s = extract_subgraph(bm, assignment_of(bm, {{"CC.p[0,2]", 1}}));
  const auto g = build_graph(inst.layout);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const bool below = std::max(g.edge(e).u, g.edge(e).v) <= g.cell(0, 2);
    CHECK(s.multiplicity[static_cast<std::size_t>(e)] == (below ? 2 : 0));
  }
  CHECK(s.weight == 6);
  const auto walk = euler_tour(s);
  CHECK(walk.front() == g.depot());
  CHECK(walk.back() == g.depot());
  CHECK(walk.size() == 7);
}

TEST_CASE("empty subgraph with no picks is a valid tour") {
  Layout l;
  l.num_aisles = 2;
  const auto s = empty_subgraph(build_graph(l));
  const auto r = validate(s, CellList{});
  CHECK(r.ok());
  CHECK(euler_tour(s) == std::vector<VertexId>{build_graph(l).depot()});
  CHECK_FALSE(validate(s, CellList{{0, 3}}).ok());
}

TEST_CASE("two disjoint cycles are not connected") {
  Layout l;
  l.num_aisles = 4;
  l.cells_per_subaisle = 3;
  const auto g = build_graph(l);
  auto s = empty_subgraph(g);
  auto loop = [&](int j) {
    for (EdgeId e : g.vertical_run(j, 0, g.vertices_per_aisle() - 1)) s.multiplicity[static_cast<std::size_t>(e)] = 1;
    for (EdgeId e : g.vertical_run(j + 1, 0, g.vertices_per_aisle() - 1)) s.multiplicity[static_cast<std::size_t>(e)] = 1;
    s.multiplicity[static_cast<std::size_t>(g.horizontal_edge(j, 0))] = 1;
    s.multiplicity[static_cast<std::size_t>(g.horizontal_edge(j, 1))] = 1;
  };
  loop(0);
  loop(2);
  const auto r = validate(s, CellList{{0, 1}, {3, 1}});
  CHECK(r.even);
  CHECK(r.covers);
  CHECK(r.depot_included);
  CHECK_FALSE(r.connected);
  CHECK_THROWS_AS(euler_tour(s), ValidationError);
}

TEST_CASE("single doubled edge") {
  Layout l;
  l.num_aisles = 1;
  l.cells_per_subaisle = 3;
  const auto g = build_graph(l);
  auto s = empty_subgraph(g);
  s.multiplicity[static_cast<std::size_t>(g.vertical_edge(0, 0))] = 2;
  CHECK(euler_tour(s) == std::vector<VertexId>{g.depot(), g.cell(0, 0), g.depot()});
}

TEST_CASE("small two-block subgraph from edge-model variables") {
  const auto inst = std::get<Instance>(load("small_two_block.json"));
  const auto bm = build_ec_sprp(inst);
  const auto x = assignment_of(bm, {{"EC.x2[0,0]", 1},
                                    {"EC.x1[1,0]", 1},
                                    {"EC.x1[2,1]", 1},
                                    {"EC.x1[1,2]", 1},
                                    {"EC.x1[2,2]", 1},
                                    {"EC.pass[1,0]", 1},
                                    {"EC.pass[1,1]", 1},
                                    {"EC.pass[2,0]", 1},
                                    {"EC.pass[3,1]", 1},
                                    {"EC.p[0,1]", 1},
                                    {"EC.q[3,3]", 1}});
  const auto s = extract_subgraph(bm, x);
  const auto g = build_graph(inst.layout);

  auto want = empty_subgraph(g);
  auto run = [&](int j, int from, int to, int m) {
    for (EdgeId e : g.vertical_run(j, from, to)) want.multiplicity[static_cast<std::size_t>(e)] += m;
  };
  auto h = [&](int gap, int k, int m) { want.multiplicity[static_cast<std::size_t>(g.horizontal_edge(gap, k))] += m; };
  run(0, g.cross_position(0), g.cell_position(1), 2);
  run(1, 0, g.vertices_per_aisle() - 1, 1);
  run(2, g.cross_position(0), g.cross_position(1), 1);
  run(3, g.cell_position(3), g.cross_position(1), 2);
  run(3, g.cross_position(1), g.cross_position(2), 1);
  h(0, 0, 2);
  h(1, 0, 1);
  h(2, 1, 1);
  h(1, 2, 1);
  h(2, 2, 1);
  CHECK(s.multiplicity == want.multiplicity);

  const auto r = validate(s, inst);
  CHECK(r.ok());
  const auto walk = euler_tour(s);
  CHECK(static_cast<int>(walk.size()) - 1 == s.num_edge_copies());
  CHECK(walk_length(inst.layout, walk) == s.weight);
}

TEST_CASE("multiplicity above two is an internal error") {
  Instance inst;
  inst.layout.num_aisles = 1;
  inst.required = {{2}};
  inst.validate();
  const auto bm = build_cc_sprp(inst);
  CHECK_THROWS_AS(extract_subgraph(bm, assignment_of(bm, {{"CC.p[0,2]", 1}, {"CC.pass[0]", 1}})), InternalError);
}

TEST_CASE("optimal solutions give valid tours of matching length") {
  HighsBackend h;
  for (std::uint64_t s = 1; s <= 15; ++s) {
    std::vector<AnyInstance> insts{random_sprp(2 + static_cast<int>(s % 4), 2 + static_cast<int>(s % 6), s),
                                   random_sprp(2 + static_cast<int>(s % 3), 2 + static_cast<int>(s % 6), s, 3),
                                   random_ss(2, 3, 3, s), random_ss(3, 3, 3, s, 3)};
    for (const auto& inst : insts)
      for (Formulation f : {Formulation::GS, Formulation::CC, Formulation::EC}) {
        if (!supports(f, layout_of(inst))) continue;
        const auto out = solve_instance(inst, f, h);
        REQUIRE(out.solution.status == SolveStatus::optimal);
        INFO(id_of(inst) << " " << to_string(f));
        const auto sub = extract_subgraph(out.built, out.solution);
        const auto rep = validate(sub, picked_cells(out.built, out.solution.assignment));
        CHECK(rep.ok());
        const auto walk = euler_tour(sub);
        CHECK(walk_length(layout_of(inst), walk) == *out.solution.objective);
      }
  }
}

TEST_CASE("SVG output") {
  const auto inst = std::get<Instance>(load("small_two_block.json"));
  const auto svg = to_svg(empty_subgraph(build_graph(inst.layout)));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}
