#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "sprp/costs.hpp"
#include "sprp/graph.hpp"
#include "sprp/oracle.hpp"

using namespace sprp;

namespace {

Layout make(int m, int crosses, int cells) {
  Layout l;
  l.num_aisles = m;
  l.num_crosses = crosses;
  l.cells_per_subaisle = cells;
  return l;
}

int count_horizontal(const WarehouseGraph& g) {
  int h = 0;
  for (const auto& e : g.edges()) h += g.aisle_of(e.u) != g.aisle_of(e.v);
  return h;
}

}  // namespace

TEST_CASE("single aisle graph counts") {
  const auto g = build_graph(make(1, 2, 3));
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 4);
  CHECK(count_horizontal(g) == 0);
}

TEST_CASE("two-block two-aisle graph counts") {
  const auto g = build_graph(make(2, 3, 2));
  int crossings = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) crossings += g.is_intersection(v);
  CHECK(crossings == 6);
  CHECK(g.num_vertices() - crossings == 8);
  CHECK(count_horizontal(g) == 3);
}

TEST_CASE("vertex count formula and no parallel edges") {
  for (int m : {1, 2, 5})
    for (int k : {2, 3})
      for (int n : {1, 4, 45}) {
        const auto g = build_graph(make(m, k, n));
        CHECK(g.num_vertices() == m * k + m * (k - 1) * n);
        std::set<std::pair<int, int>> seen;
        for (const auto& e : g.edges()) {
          CHECK(e.weight > 0);
          CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
        }
      }
}

TEST_CASE("edge weights are rectilinear distances") {
  auto l = make(3, 3, 4);
  l.aisle_pitch = 7;
  l.cell_pitch = 2;
  l.cross_offset = 3;
  const auto g = build_graph(l);
  for (const auto& e : g.edges()) {
    const Length dx = std::abs(g.x_of(e.u) - g.x_of(e.v));
    const Length dy = std::abs(g.y_of(e.u) - g.y_of(e.v));
    CHECK(e.weight == dx + dy);
    CHECK((dx == 0 || dy == 0));
  }
}

TEST_CASE("four-aisle two-block adjacency") {
  const auto g = build_graph(make(4, 3, 5));
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 3; ++k) {
      std::set<VertexId> nb;
      for (const auto& inc : g.neighbors(g.intersection(j, k))) nb.insert(inc.to);
      if (j + 1 < 4) CHECK(nb.count(g.intersection(j + 1, k)));
      if (j > 0) CHECK(nb.count(g.intersection(j - 1, k)));
      if (k > 0) CHECK(nb.count(g.cell(j, k * 5 - 1)));
      if (k < 2) CHECK(nb.count(g.cell(j, k * 5)));
      CHECK(nb.size() == static_cast<std::size_t>((j > 0) + (j < 3) + (k > 0) + (k < 2)));
    }
}

TEST_CASE("invalid layouts name the field") {
  auto l = make(3, 3, 4);
  l.depot_cross = 1;
  try {
    build_graph(l);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "depot_cross");
  }
  l = make(3, 2, 4);
  l.aisle_pitch = 0;
  CHECK_THROWS_AS(build_graph(l), ValidationError);
}

TEST_CASE("branch cost of the bottom-most cell") {
  const auto cm = cost_model(make(1, 2, 90), {{0}});
  CHECK(cm.at(0, 0).branch_from_below == 2);
}

TEST_CASE("segments telescope to branches for cells 2 and 5") {
  const auto cm = cost_model(make(1, 2, 90), {{2, 5}});
  CHECK(cm.at(0, 2).segment_from_below == 6);
  CHECK(cm.at(0, 5).segment_from_below == 6);
  CHECK(cm.at(0, 5).branch_from_below == 12);
}

TEST_CASE("subaisle traversal cost") {
  const auto cm = cost_model(make(2, 2, 90), {});
  CHECK(cm.subaisle_cost == 91);
  CHECK(cm.horiz_cost == std::vector<Length>{5});
}

TEST_CASE("cost model rejects bad positions") {
  CHECK_THROWS_AS(cost_model(make(1, 2, 10), {{10}}), RangeError);
  CHECK_THROWS_AS(cost_model(make(1, 2, 10), {{4, 2}}), ValidationError);
}

TEST_CASE("telescoping and complementarity over random blocks") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto l = make(3, 2 + trial % 2, 12);
    l.cell_pitch = 1 + trial % 3;
    l.cross_offset = 1 + trial % 2;
    std::vector<std::vector<int>> pos(3);
    for (auto& p : pos) {
      for (int c = 0; c < l.cells_per_aisle(); ++c)
        if (rng() % 4 == 0) p.push_back(c);
    }
    const auto cm = cost_model(l, pos);
    for (int j = 0; j < 3; ++j) {
      const auto& cells = pos[static_cast<std::size_t>(j)];
      for (std::size_t t = 0; t < cells.size(); ++t) {
        const int c = cells[t];
        const auto& cc = cm.at(j, c);
        CHECK(cc.branch_from_below + cc.branch_from_above == 2 * cm.subaisle_cost);
        Length below = 0, above = 0;
        for (std::size_t u = 0; u < cells.size(); ++u) {
          if (l.block_of(cells[u]) != l.block_of(c)) continue;
          if (cells[u] <= c) below += cm.at(j, cells[u]).segment_from_below;
          if (cells[u] >= c) above += cm.at(j, cells[u]).segment_from_above;
        }
        CHECK(below == cc.branch_from_below);
        CHECK(above == cc.branch_from_above);
      }
    }
  }
}

TEST_CASE("shortest paths between intersections match the closed form") {
  const auto l = make(4, 3, 5);
  const auto g = build_graph(l);
  std::vector<VertexId> xs;
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 3; ++k) xs.push_back(g.intersection(j, k));
  const auto mc = apsp(g, xs);
  for (int a = 0; a < mc.size(); ++a)
    for (int b = 0; b < mc.size(); ++b) {
      const VertexId u = xs[static_cast<std::size_t>(a)], v = xs[static_cast<std::size_t>(b)];
      CHECK(mc(a, b) == std::abs(g.x_of(u) - g.x_of(v)) + std::abs(g.y_of(u) - g.y_of(v)));
    }
  CHECK(mc(0, 11) == 3 * l.aisle_pitch + 2 * l.subaisle_length());
}
