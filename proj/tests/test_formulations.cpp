#include <catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace sprp;
using namespace sprp::testing;

namespace {

Instance hand(int m, int crosses, int cells, int depot_aisle, int depot_cross,
              std::vector<std::vector<int>> required) {
  Instance inst;
  inst.layout.num_aisles = m;
  inst.layout.num_crosses = crosses;
  inst.layout.cells_per_subaisle = cells;
  inst.layout.depot_aisle = depot_aisle;
  inst.layout.depot_cross = depot_cross;
  inst.required = std::move(required);
  inst.validate();
  return inst;
}

Coef solve_with(const BuiltModel& bm, Backend& b) {
  const auto s = solve(bm.model, b);
  REQUIRE(s.status == SolveStatus::optimal);
  return *s.objective;
}

std::set<std::string> violated_families(const MipModel& m, const std::vector<Coef>& x) {
  std::set<std::string> out;
  for (const auto& c : m.constraints())
    if (!satisfied(c, activity(c, x))) out.insert(c.family);
  return out;
}

}  // namespace

TEST_CASE("GS variable counts") {
  const auto inst = hand(3, 2, 90, 1, 0, {{4}, {}, {10, 20}});
  const auto c = build_gs_sprp(inst).model.counts();
  CHECK(c.binaries == 4 * 2 + 3 + 3 + 3 + 2 * 3);
  CHECK(c.integers == 6);
  CHECK(c.continuous == 0);
}

TEST_CASE("configuration models reject two blocks") {
  const auto inst = hand(2, 3, 4, 0, 0, {{1}, {6}});
  CHECK_THROWS_AS(build_gs_sprp(inst), UnsupportedLayout);
  CHECK_THROWS_AS(build_cc_sprp(inst), UnsupportedLayout);
  CHECK_NOTHROW(build_ec_sprp(inst));
}

TEST_CASE("single aisle return tours") {
  HighsBackend h;
  const auto inst = hand(1, 2, 90, 0, 0, {{2, 5}});
  CHECK(solve_with(build_ec_sprp(inst), h) == 12);
  CHECK(solve_with(build_cc_sprp(inst), h) == 12);
  CHECK(solve_with(build_gs_sprp(inst), h) == 12);
  const auto top = hand(1, 2, 90, 0, 1, {{2, 5}});
  const Length far = 2 * (top.layout.cross_y(1) - top.layout.cell_y(2));
  CHECK(solve_with(build_cc_sprp(top), h) == far);
  CHECK(solve_with(build_ec_sprp(top), h) == far);
  CHECK(solve_with(build_gs_sprp(top), h) == far);
}

TEST_CASE("bottom picks in three aisles use bottom-twice configurations") {
  const auto inst = hand(3, 2, 90, 0, 0, {{0}, {0}, {0}});
  const auto bm = build_cc_sprp(inst);
  EnumerationBackend e;
  const auto s = solve(bm.model, e);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(*s.objective == 2 * 2 * 5 + 3 * 2);
  for (int j = 0; j < 2; ++j) CHECK(s.assignment[static_cast<std::size_t>(*bm.model.find("CC.xx" + detail::idx(j)))] == 1);
}

TEST_CASE("coverage forbids both segments on one cell") {
  const auto inst = hand(2, 2, 6, 0, 0, {{2}, {3}});
  const auto bm = build_ec_sprp(inst);
  HighsBackend h;
  auto s = solve(bm.model, h);
  REQUIRE(s.status == SolveStatus::optimal);
  auto x = s.assignment;
  x[static_cast<std::size_t>(*bm.model.find("EC.p[1,3]"))] = 1;
  x[static_cast<std::size_t>(*bm.model.find("EC.q[1,3]"))] = 1;
  CHECK(violated_families(bm.model, x).count("coverage"));
}

TEST_CASE("two separate loops are cut off by the next-aisle rows") {
  const auto inst = hand(4, 2, 6, 0, 0, {{2}, {}, {}, {3}});
  const auto bm = build_ec_sprp(inst);
  std::vector<Coef> x(static_cast<std::size_t>(bm.model.num_variables()), 0);
  auto set = [&](const std::string& n, Coef v) { x[static_cast<std::size_t>(*bm.model.find(n))] = v; };
  for (int j : {0, 1, 2, 3}) set("EC.pass" + detail::idx(j, 0), 1);
  for (int k : {0, 1}) {
    set("EC.x1" + detail::idx(0, k), 1);
    set("EC.x1" + detail::idx(2, k), 1);
  }
  for (int j : {0, 1, 2, 3})
    for (int k : {0, 1}) set("EC.pi" + detail::idx(j, k), 1);
  const auto bad = violated_families(bm.model, x);
  CHECK(bad.count("next_aisle"));
  CHECK_FALSE(bad.count("coverage"));
  CHECK_FALSE(bad.count("parity"));
}

TEST_CASE("previous-aisle rows exist only from the second aisle") {
  const auto inst = hand(2, 2, 6, 0, 0, {{2}, {3}});
  const auto bm = build_ec_sprp(inst);
  int rows = 0;
  for (const auto& c : bm.model.constraints())
    if (c.family == "previous_aisle") {
      ++rows;
      CHECK(c.name.rfind("previous_aisle[1", 0) == 0);
    }
  CHECK(rows == 3);
}

TEST_CASE("connectivity variables are continuous") {
  const auto c1 = build_ec_sprp(hand(3, 2, 6, 0, 0, {{2}, {}, {3}})).model.counts();
  const auto c2 = build_ec_sprp(hand(3, 3, 3, 0, 0, {{2}, {}, {3}})).model.counts();
  CHECK(c1.continuous == 3 + 2);
  CHECK(c2.continuous == 3 * 3 + 2 * 3 + 2 * 6);
}

TEST_CASE("model size dominance on random instances") {
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const auto inst = random_sprp(2 + static_cast<int>(s % 5), 3 + static_cast<int>(s % 8), s);
    const auto gs = build_gs_sprp(inst).model.counts();
    const auto cc = build_cc_sprp(inst).model.counts();
    CHECK(cc.integer_like() < gs.integer_like());
    CHECK(cc.constraints <= gs.constraints);
  }
}

TEST_CASE("formulations agree with the oracle on small random instances") {
  HighsBackend h;
  for (std::uint64_t s = 1; s <= 40; ++s) {
    const int m = 2 + static_cast<int>(s % 4);
    const int picks = 1 + static_cast<int>(s % 7);
    const auto inst = random_sprp(m, picks, 100 + s);
    const Length want = solve_sprp_oracle(inst).objective;
    INFO(inst.id());
    CHECK(solve_with(build_gs_sprp(inst), h) == want);
    CHECK(solve_with(build_cc_sprp(inst), h) == want);
    CHECK(solve_with(build_ec_sprp(inst), h) == want);
    const auto two = random_sprp(m, picks, 200 + s, 3);
    INFO(two.id());
    CHECK(solve_with(build_ec_sprp(two), h) == solve_sprp_oracle(two).objective);
  }
}

TEST_CASE("scattered formulations agree with the oracle") {
  HighsBackend h;
  for (std::uint64_t s = 1; s <= 30; ++s) {
    const int alpha = 1 + static_cast<int>(s % 3);
    const int m = 2 + static_cast<int>(s % 3);
    const int a = 2 + static_cast<int>(s % 4);
    const auto ss = random_ss(alpha, m, a, 300 + s);
    const Length want = solve_sprp_ss_oracle(ss).objective;
    INFO(ss.id());
    CHECK(solve_with(build_gs_sprp_ss(ss), h) == want);
    CHECK(solve_with(build_cc_sprp_ss(ss), h) == want);
    CHECK(solve_with(build_ec_sprp_ss(ss), h) == want);
    const auto two = random_ss(alpha, m, a, 400 + s, 3);
    INFO(two.id());
    CHECK(solve_with(build_ec_sprp_ss(two), h) == solve_sprp_ss_oracle(two).objective);
  }
}

TEST_CASE("depot inclusion with swapped previous-gap terms is not exact") {
  // The swapped variant both admits tours that skip the depot and rejects
  // some optimal tours. The default must match the oracle on the same seeds.
  HighsBackend h;
  int below = 0, above = 0;
  for (std::uint64_t s = 1; s <= 40; ++s) {
    auto inst = random_sprp(3, 3, 500 + s);
    INFO(inst.id());
    const Length want = solve_sprp_oracle(inst).objective;
    GsOptions swapped;
    swapped.swap_previous_gap_depot = true;
    const auto got = solve(build_gs_sprp(inst, cost_model(routing_data(inst)), swapped).model, h);
    REQUIRE(got.status == SolveStatus::optimal);
    below += *got.objective < want;
    above += *got.objective > want;
    CHECK(solve_with(build_gs_sprp(inst), h) == want);
  }
  CHECK(below > 0);
  CHECK(above > 0);
}

TEST_CASE("double traversal through the middle cross of the depot aisle") {
  // every pick above the middle cross in the depot aisle
  const auto inst = hand(3, 3, 5, 1, 0, {{}, {6, 8}, {}});
  HighsBackend h;
  const auto bm = build_ec_sprp(inst);
  const auto s = solve(bm.model, h);
  REQUIRE(s.status == SolveStatus::optimal);
  CHECK(*s.objective == solve_sprp_oracle(inst).objective);
  CHECK(*s.objective == 2 * inst.layout.cell_y(8));
  CHECK(s.assignment[static_cast<std::size_t>(*bm.model.find("EC.p[1]mid"))] == 1);
}

TEST_CASE("optional constraints do not change optima") {
  EnumerationBackend e;
  FormulationOptions off;
  off.ec_cross_bound = false;
  off.ec_edge_pairs = false;
  for (const auto& inst : tiny_corpus()) {
    INFO(id_of(inst));
    CHECK(solve_with(build_model(inst, Formulation::EC), e) == solve_with(build_model(inst, Formulation::EC, off), e));
  }
}
