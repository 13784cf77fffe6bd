#include <catch_amalgamated.hpp>

#include <filesystem>
#include <map>

#include "support.hpp"

using namespace sprp;
using namespace sprp::testing;

TEST_CASE("distinct SKU count") {
  CHECK(distinct_sku_count(10, 25, 90, 3) == 750);
  CHECK(distinct_sku_count(5, 4, 90, 1) == 360);
  CHECK(distinct_sku_count(100, 5, 90, 5) == 100);
  CHECK(distinct_sku_count(1, 3, 7, 2) == 11);
  CHECK_THROWS_AS(distinct_sku_count(0, 3, 7, 2), ValidationError);
}

TEST_CASE("generation is deterministic") {
  CHECK(serialize(random_sprp(5, 5, 11)) == serialize(random_sprp(5, 5, 11)));
  CHECK(serialize(random_ss(3, 5, 5, 11)) == serialize(random_ss(3, 5, 5, 11)));
  CHECK(serialize(random_sprp(5, 5, 11)) != serialize(random_sprp(5, 5, 12)));
}

TEST_CASE("sampled pick positions are distinct and in range") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto inst = random_sprp(5, 25, s);
    CHECK(inst.num_required() == 25);
    for (const auto& a : inst.required) {
      CHECK(a.size() <= 90);
      CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    }
  }
  CHECK_THROWS_AS(random_sprp(1, 91, 1), ValidationError);
}

TEST_CASE("depot side is a fair coin") {
  int top = 0;
  const int draws = 10000;
  for (int r = 0; r < draws; ++r) {
    GeneratorConfig c;
    c.num_aisles = 5;
    c.num_articles = 1;
    c.replicate = r;
    top += generate_sprp(c).layout.depot_on_top();
  }
  const double f = static_cast<double>(top) / draws;
  CHECK(f >= 0.48);
  CHECK(f <= 0.52);
}

TEST_CASE("no duplication when alpha is one") {
  const auto ss = random_ss(1, 3, 6, 5);
  for (const auto& h : ss.skus) CHECK(ss.positions_of(h).size() == 1);
  const auto inst = induced_unique_instance(ss);
  CHECK(inst.num_required() == 6);
}

TEST_CASE("average positions per SKU follows the scatter factor") {
  const auto ss = random_ss(5, 25, 25, 3);
  const std::int64_t xi = ss.provenance.at("distinct_skus").get<std::int64_t>();
  CHECK(xi == 450);
  for (const auto& h : ss.skus) CHECK(ss.positions_of(h).size() == 5);
}

TEST_CASE("scattered instances are always coverable") {
  for (int alpha = 1; alpha <= 5; ++alpha)
    for (std::uint64_t s = 1; s <= 10; ++s) {
      const auto ss = random_ss(alpha, 3, 5, s);
      CHECK_NOTHROW(ss.validate());
      CHECK(ss.skus.size() == 5);
    }
  CHECK_THROWS_AS(random_ss(1, 1, 91, 1), ValidationError);
}

TEST_CASE("round trip through files") {
  const auto dir = std::filesystem::temp_directory_path() / "sprp_roundtrip";
  std::filesystem::create_directories(dir);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const AnyInstance a = random_sprp(4, 6, s, 2 + s % 2);
    const AnyInstance b = random_ss(2, 3, 4, s, 2 + s % 2);
    for (const auto& inst : {a, b}) {
      const auto path = (dir / "x.json").string();
      write_instance(inst, path);
      CHECK(read_instance(path) == inst);
    }
  }
}

TEST_CASE("missing demand is reported by name") {
  try {
    load("missing_demand.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("demand") != std::string::npos);
  }
  nlohmann::json j = to_json(AnyInstance{random_sprp(2, 2, 1)});
  j.erase("required");
  CHECK_THROWS_WITH(instance_from_json(j), Catch::Matchers::ContainsSubstring("required"));
}

TEST_CASE("small scattered instance candidate sets") {
  const auto ss = std::get<ScatteredInstance>(load("small_scattered.json"));
  std::map<std::string, std::size_t> sizes;
  for (const auto& h : ss.skus) sizes[h] = ss.positions_of(h).size();
  CHECK(sizes == std::map<std::string, std::size_t>{{"A", 3}, {"B", 2}, {"C", 1}});
}

TEST_CASE("grid cardinalities") {
  CHECK(grid_preset("sprp-single").configs().size() == 1250);
  CHECK(grid_preset("ss-single").configs().size() == 6250);
}
