#include <catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"

using namespace sprp;
using namespace sprp::testing;

TEST_CASE("empty model is optimal at zero") {
  MipModel m;
  EnumerationBackend e;
  const auto s = solve(m, e);
  CHECK(s.status == SolveStatus::optimal);
  CHECK(s.objective == 0);
}

TEST_CASE("one binary with a lower bound") {
  for (const char* b : {"enumerate", "highs"}) {
    MipModel m;
    const int x = m.add_binary("x", 1);
    m.add_constraint("lb", "x>=1", {{x, 1}}, Sense::ge, 1);
    auto backend = make_backend(b);
    const auto s = solve(m, *backend);
    CHECK(s.status == SolveStatus::optimal);
    CHECK(s.objective == 1);
  }
}

TEST_CASE("negative objective") {
  MipModel m;
  m.add_binary("x", -1);
  EnumerationBackend e;
  const auto s = solve(m, e);
  CHECK(s.objective == -1);
  CHECK(s.assignment == std::vector<Coef>{1});
}

TEST_CASE("infeasible pair") {
  for (const char* b : {"enumerate", "highs"}) {
    MipModel m;
    const int x = m.add_binary("x");
    m.add_constraint("a", "x>=1", {{x, 1}}, Sense::ge, 1);
    m.add_constraint("b", "x<=0", {{x, 1}}, Sense::le, 0);
    auto backend = make_backend(b);
    CHECK(solve(m, *backend).status == SolveStatus::infeasible);
  }
}

TEST_CASE("general integers and continuous upper-bound rules") {
  // max y subject to y <= x, 2x <= 3, y continuous, written as min -x
  MipModel m;
  const int x = m.add_variable("x", VarKind::integer, 0, 5, -1);
  const int y = m.add_variable("y", VarKind::continuous, 0, 1);
  m.add_constraint("c", "2x<=3", {{x, 2}}, Sense::le, 3);
  m.add_constraint("c", "y<=x", {{y, 1}, {x, -1}}, Sense::le, 0);
  m.add_constraint("c", "y>=1", {{y, 1}}, Sense::ge, 1);
  EnumerationBackend e;
  const auto s = solve(m, e);
  CHECK(s.status == SolveStatus::optimal);
  CHECK(s.objective == -1);
}

TEST_CASE("enumeration refuses oversized models") {
  MipModel m;
  for (int i = 0; i < 41; ++i) m.add_binary("x" + std::to_string(i), 1);
  EnumerationBackend e;
  CHECK_THROWS_AS(e.run(m, {}), BudgetExceeded);
}

TEST_CASE("duplicate terms merge and the exact check catches violations") {
  MipModel m;
  const int x = m.add_binary("x", 3);
  const int y = m.add_binary("y", 2);
  m.add_constraint("f", "r", {{x, 1}, {y, 1}, {x, 1}, {y, -1}}, Sense::ge, 1);
  CHECK(m.constraints().front().terms.size() == 1);
  CHECK(check_assignment(m, {0, 1}) != "");
  CHECK(check_assignment(m, {1, 0}) == "");
  CHECK(objective_value(m, {1, 1}) == 5);
  CHECK(m.find("y") == y);
  CHECK_FALSE(m.find("z"));
}

TEST_CASE("LP export lists every row and bound") {
  const auto bm = build_cc_sprp(random_sprp(3, 4, 5));
  std::ostringstream out;
  write_lp(bm.model, out);
  const auto text = out.str();
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  CHECK(text.find("coverage") != std::string::npos);
}

TEST_CASE("backends agree on the tiny corpus") {
  EnumerationBackend e;
  HighsBackend h;
  int compared = 0;
  for (const auto& inst : tiny_corpus())
    for (Formulation f : {Formulation::GS, Formulation::CC, Formulation::EC}) {
      if (!supports(f, layout_of(inst))) continue;
      const auto bm = build_model(inst, f);
      const auto a = solve(bm.model, e);
      const auto b = solve(bm.model, h);
      INFO(id_of(inst) << " " << to_string(f));
      REQUIRE(a.status == SolveStatus::optimal);
      REQUIRE(b.status == SolveStatus::optimal);
      CHECK(a.objective == b.objective);
      ++compared;
    }
  CHECK(compared > 50);
}
