#pragma once

#include <random>
#include <string>
#include <vector>

#include "sprp/bench.hpp"
#include "sprp/oracle.hpp"
#include "sprp/tour.hpp"

namespace sprp::testing {

inline AnyInstance load(const std::string& name) { return read_instance(std::string(SPRP_TEST_DATA) + "/" + name); }

inline Instance random_sprp(int m, int picks, std::uint64_t seed, int crosses = 2, int positions = 90) {
  GeneratorConfig c;
  c.num_aisles = m;
  c.num_articles = picks;
  c.num_crosses = crosses;
  c.positions_per_aisle = positions;
  c.seed = seed;
  return generate_sprp(c);
}

inline ScatteredInstance random_ss(int alpha, int m, int a, std::uint64_t seed, int crosses = 2, int positions = 90) {
  GeneratorConfig c;
  c.alpha = alpha;
  c.num_aisles = m;
  c.num_articles = a;
  c.num_crosses = crosses;
  c.positions_per_aisle = positions;
  c.seed = seed;
  return generate_sprp_ss(c);
}

inline Length oracle_value(const AnyInstance& inst) {
  if (const auto* s = std::get_if<Instance>(&inst)) return solve_sprp_oracle(*s).objective;
  return solve_sprp_ss_oracle(std::get<ScatteredInstance>(inst)).objective;
}

// Small layouts whose models stay within the enumeration budget.
inline std::vector<AnyInstance> tiny_corpus() {
  std::vector<AnyInstance> out;
  std::uint64_t seed = 7000;
  for (int crosses : {2, 3})
    for (int m = 1; m <= (crosses == 2 ? 3 : 2); ++m)
      for (int picks = 1; picks <= 3; ++picks)
        for (int rep = 0; rep < 2; ++rep) out.emplace_back(random_sprp(m, picks, ++seed, crosses, 2 * (crosses - 1) + 2));
  for (int alpha : {1, 2})
    for (int m = 1; m <= 2; ++m)
      for (int a = 1; a <= 2; ++a) out.emplace_back(random_ss(alpha, m, a, ++seed, 2, 4));
  return out;
}

}  // namespace sprp::testing
