#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace sprp;
using namespace sprp::testing;

namespace {

Instance single_pick(int m, int aisle, int cell, int depot_aisle, int depot_cross) {
  Instance inst;
  inst.layout.num_aisles = m;
  inst.layout.depot_aisle = depot_aisle;
  inst.layout.depot_cross = depot_cross;
  inst.required.resize(static_cast<std::size_t>(m));
  inst.required[static_cast<std::size_t>(aisle)] = {cell};
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("trivial distances") {
  Layout l;
  l.num_aisles = 3;
  const auto g = build_graph(l);
  const auto mc = apsp(g, {g.intersection(0, 0), g.intersection(1, 0), g.intersection(0, 0)});
  CHECK(mc(0, 0) == 0);
  CHECK(mc(0, 1) == l.aisle_pitch);
  CHECK(mc(0, 2) == 0);
  CHECK_THROWS_AS(apsp(g, {}), ValidationError);
}

TEST_CASE("single required cell is an out-and-back") {
  for (int aisle = 0; aisle < 3; ++aisle)
    for (int cross : {0, 1}) {
      const auto inst = single_pick(3, aisle, 17, 1, cross);
      const auto g = build_graph(inst.layout);
      const auto d = dijkstra(g, g.depot())[static_cast<std::size_t>(g.cell(aisle, 17))];
      CHECK(solve_sprp_oracle(inst).objective == 2 * d);
    }
}

TEST_CASE("two cells in the depot aisle") {
  Instance inst;
  inst.layout.num_aisles = 2;
  inst.required = {{2, 5}, {}};
  inst.validate();
  CHECK(solve_sprp_oracle(inst).objective == 12);
  CHECK(solve_single_aisle(inst) == 12);
}

TEST_CASE("closed form agrees with Held-Karp when picks stay in the depot aisle") {
  for (std::uint64_t s = 1; s <= 50; ++s) {
    auto inst = random_sprp(1, 1 + static_cast<int>(s % 6), s, 2 + static_cast<int>(s % 2));
    inst.layout.num_aisles = 1;
    CHECK(solve_single_aisle(inst) == solve_sprp_oracle(inst).objective);
  }
}

TEST_CASE("Held-Karp equals permutation brute force") {
  for (std::uint64_t s = 1; s <= 60; ++s) {
    const auto inst = random_sprp(2 + static_cast<int>(s % 5), 1 + static_cast<int>(s % 8), s, 2 + static_cast<int>(s % 2));
    const auto g = build_graph(inst.layout);
    const auto mc = apsp(g, terminal_vertices(g, inst));
    const auto hk = solve_sprp_oracle(inst);
    CHECK(hk.objective == permutation_brute_force(mc));
    // the returned order realizes the value
    Length len = 0;
    for (std::size_t i = 0; i < hk.order.size(); ++i) {
      const auto d = dijkstra(g, hk.order[i]);
      len += d[static_cast<std::size_t>(hk.order[(i + 1) % hk.order.size()])];
    }
    CHECK(len == hk.objective);
  }
}

TEST_CASE("closed-walk lower bound") {
  for (std::uint64_t s = 1; s <= 40; ++s) {
    const auto inst = random_sprp(3 + static_cast<int>(s % 4), 2 + static_cast<int>(s % 9), s);
    const auto g = build_graph(inst.layout);
    const auto d = dijkstra(g, g.depot());
    Length far = 0;
    for (int j = 0; j < inst.layout.num_aisles; ++j)
      for (int c : inst.required[static_cast<std::size_t>(j)]) far = std::max(far, d[static_cast<std::size_t>(g.cell(j, c))]);
    CHECK(solve_sprp_oracle(inst).objective >= 2 * far);
  }
}

TEST_CASE("oracle refuses oversized instances") {
  const auto inst = random_sprp(5, 16, 3);
  CHECK_THROWS_AS(solve_sprp_oracle(inst), BudgetExceeded);
}

TEST_CASE("scattered oracle degenerates at alpha one") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto ss = random_ss(1, 2 + static_cast<int>(s % 3), 2 + static_cast<int>(s % 4), s);
    CHECK(solve_sprp_ss_oracle(ss).objective == solve_sprp_oracle(induced_unique_instance(ss)).objective);
  }
}

TEST_CASE("duplicate supply never increases the scattered optimum") {
  std::mt19937_64 rng(9);
  for (std::uint64_t s = 1; s <= 20; ++s) {
    auto ss = random_ss(2, 3, 3, s);
    const Length before = solve_sprp_ss_oracle(ss).objective;
    const auto& h = ss.skus[rng() % ss.skus.size()];
    SupplyEntry extra{static_cast<int>(rng() % 3), static_cast<int>(rng() % 90), h, 1};
    ss.supply.push_back(extra);
    CHECK(solve_sprp_ss_oracle(ss).objective <= before);
  }
}

TEST_CASE("small scattered instance") {
  const auto ss = std::get<ScatteredInstance>(load("small_scattered.json"));
  const auto r = solve_sprp_ss_oracle(ss);
  // frozen from the exhaustive choice enumeration, cross-checked by hand-built brute force
  CHECK(r.objective == 48);
  CHECK(r.positions.size() == 3);
}

TEST_CASE("minimal covers for general demand") {
  std::vector<SupplyEntry> offers{{0, 1, "A", 2}, {0, 2, "A", 1}, {1, 3, "A", 1}};
  const auto covers = minimal_covers(offers, 2);
  CHECK(covers.size() == 2);  // {first} and {second, third}
}
