#include <catch_amalgamated.hpp>

#include <filesystem>

#include "support.hpp"

using namespace sprp;
using namespace sprp::testing;

namespace {

RunRecord rec(const std::string& f, double ms, int alpha = 1, int aisles = 2, int articles = 3) {
  RunRecord r;
  r.instance_id = "i";
  r.kind = "sprp";
  r.formulation = f;
  r.backend = "highs";
  r.status = "optimal";
  r.objective = 10;
  r.wall_ms = ms;
  r.alpha = alpha;
  r.aisles = aisles;
  r.articles = articles;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("runtime statistics") {
  const auto s = runtime_stats({10, 1000}, 2);
  CHECK(s.mean == Catch::Approx(505));
  CHECK(s.median == Catch::Approx(505));
  CHECK(s.geomean == Catch::Approx(100));
  CHECK(runtime_stats({0, 4, 9}, 3).geomean == Catch::Approx(6));
}

TEST_CASE("summary column discipline") {
  std::vector<RunRecord> rs{rec("GS", 1), rec("CC", 2), rec("EC", 3), rec("EC", 5, 1, 3)};
  const auto dir = std::filesystem::temp_directory_path() / "sprp_summary";
  std::filesystem::remove_all(dir);
  write_summaries(rs, dir.string());
  const auto overall = slurp(dir / "summary_overall.csv");
  CHECK(overall.rfind("metric,GS,CC,EC\n", 0) == 0);
  const auto by_aisles = slurp(dir / "summary_by_aisles.csv");
  CHECK(by_aisles == "aisles,GS,CC,EC\n2,1,2,3\n3,,,5\n");
  const auto by_alpha = slurp(dir / "summary_by_alpha.csv");
  CHECK(std::count(by_alpha.begin(), by_alpha.end(), '\n') == 2);
}

TEST_CASE("mixed layouts cannot be summarized together") {
  auto a = rec("CC", 1);
  auto b = rec("EC", 1);
  b.crosses = 3;
  CHECK_THROWS_AS(summarize({a, b}, "overall"), ValidationError);
  CHECK_THROWS_AS(summarize({}, "overall"), ValidationError);
}

TEST_CASE("runs CSV round trip") {
  auto a = rec("CC", 1.5);
  auto b = rec("EC", 2.5);
  b.status = "limit";
  b.objective.reset();
  const auto path = std::filesystem::temp_directory_path() / "sprp_runs.csv";
  {
    std::ofstream out(path);
    out << runs_csv_header() << '\n' << to_csv_row(a) << '\n' << to_csv_row(b) << '\n';
  }
  const auto back = read_runs_csv(path.string());
  REQUIRE(back.size() == 2);
  CHECK(back[0].objective == 10);
  CHECK_FALSE(back[1].objective);
  CHECK(back[1].status == "limit");
}

TEST_CASE("desk grid runs without equality violations and is reproducible") {
  auto g = grid_preset("desk");
  g.aisles = {2, 3};
  g.articles = {3, 4};
  g.replicates = 2;
  RunOptions o;
  o.workers = 2;
  o.out_dir = (std::filesystem::temp_directory_path() / "sprp_desk").string();
  const auto a = run_grid(g, o);
  const auto b = run_grid(g, o);
  REQUIRE(a.size() == 2 * 2 * 2 * 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].status == "optimal");
    CHECK(a[i].instance_id == b[i].instance_id);
    CHECK(a[i].objective == b[i].objective);
  }
}

TEST_CASE("grid files and presets") {
  const auto g = grid_from_json(nlohmann::json{{"preset", "desk"}, {"aisles", {2}}, {"replicates", 3}});
  CHECK(g.configs().size() == 1 * 6 * 3);
  CHECK(grid_preset("desk-ss").scattered());
  CHECK(grid_preset("sprp-two").num_crosses == 3);
  CHECK_THROWS_AS(grid_preset("nope"), ValidationError);
}

TEST_CASE("two-block grids only run the edge model") {
  auto g = grid_preset("desk-two");
  g.aisles = {2};
  g.articles = {3};
  g.replicates = 1;
  const auto rs = run_grid(g, RunOptions{});
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].formulation == "EC");
}
