#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sprp/graph.hpp"
#include "sprp/instance.hpp"

namespace sprp {

// Shortest-path distances between a set of vertices, depot first.
struct MetricClosure {
  std::vector<VertexId> vertices;
  std::vector<std::vector<Length>> dist;

  int size() const { return static_cast<int>(vertices.size()); }
  Length operator()(int a, int b) const {
    return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

inline std::vector<Length> dijkstra(const WarehouseGraph& g, VertexId src) {
  constexpr Length inf = std::numeric_limits<Length>::max();
  std::vector<Length> d(static_cast<std::size_t>(g.num_vertices()), inf);
  using Item = std::pair<Length, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[static_cast<std::size_t>(src)] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [du, u] = pq.top();
    pq.pop();
    if (du != d[static_cast<std::size_t>(u)]) continue;
    for (const auto& inc : g.neighbors(u)) {
      const Length nd = du + g.edge(inc.edge).weight;
      auto& dv = d[static_cast<std::size_t>(inc.to)];
      if (nd < dv) {
        dv = nd;
        pq.push({nd, inc.to});
      }
    }
  }
  return d;
}

inline MetricClosure apsp(const WarehouseGraph& g, const std::vector<VertexId>& sources) {
  if (sources.empty()) throw ValidationError("sources", "metric closure needs at least one vertex");
  MetricClosure mc;
  mc.vertices = sources;
  const auto n = sources.size();
  mc.dist.assign(n, std::vector<Length>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const auto d = dijkstra(g, sources[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const Length v = d[static_cast<std::size_t>(sources[b])];
      if (v == std::numeric_limits<Length>::max()) throw InternalError("warehouse graph is disconnected");
      mc.dist[a][b] = v;
    }
  }
  return mc;
}

struct OracleResult {
  Length objective = 0;
  std::vector<VertexId> order;                 // closed walk through the closure, depot first
  std::vector<std::pair<int, int>> positions;  // visited (aisle, cell)
};

inline constexpr int held_karp_max_nodes = 16;

// Depot plus required cell vertices, depot first, duplicates removed.
inline std::vector<VertexId> terminal_vertices(const WarehouseGraph& g, const Instance& inst) {
  std::vector<VertexId> out{g.depot()};
  for (int j = 0; j < static_cast<int>(inst.required.size()); ++j)
    for (int c : inst.required[static_cast<std::size_t>(j)]) out.push_back(g.cell(j, c));
  std::sort(out.begin() + 1, out.end());
  out.erase(std::unique(out.begin() + 1, out.end()), out.end());
  return out;
}

// Exact TSP over the closure by dynamic programming on subsets.
inline std::pair<Length, std::vector<int>> held_karp(const MetricClosure& mc) {
  const int n = mc.size();
  if (n > held_karp_max_nodes)
    throw BudgetExceeded("Held-Karp budget is " + std::to_string(held_karp_max_nodes) + " nodes, got " +
                         std::to_string(n));
  if (n == 1) return {0, {0}};
  const int k = n - 1;  // non-depot nodes 1..n-1 map to bits 0..k-1
  const std::size_t full = std::size_t{1} << k;
  constexpr Length inf = std::numeric_limits<Length>::max() / 4;
  std::vector<Length> dp(full * static_cast<std::size_t>(k), inf);
  std::vector<signed char> parent(full * static_cast<std::size_t>(k), -1);
  auto at = [&](std::size_t s, int i) { return s * static_cast<std::size_t>(k) + static_cast<std::size_t>(i); };
  for (int i = 0; i < k; ++i) dp[at(std::size_t{1} << i, i)] = mc(0, i + 1);
  for (std::size_t s = 1; s < full; ++s)
    for (int i = 0; i < k; ++i) {
      if (!(s >> i & 1)) continue;
      const Length cur = dp[at(s, i)];
      if (cur >= inf) continue;
      for (int j = 0; j < k; ++j) {
        if (s >> j & 1) continue;
        const std::size_t t = s | std::size_t{1} << j;
        const Length nv = cur + mc(i + 1, j + 1);
        if (nv < dp[at(t, j)]) {
          dp[at(t, j)] = nv;
          parent[at(t, j)] = static_cast<signed char>(i);
        }
      }
    }
  Length best = inf;
  int last = -1;
  for (int i = 0; i < k; ++i) {
    const Length v = dp[at(full - 1, i)] + mc(i + 1, 0);
    if (v < best) {
      best = v;
      last = i;
    }
  }
  std::vector<int> order;
  std::size_t s = full - 1;
  for (int i = last; i >= 0;) {
    order.push_back(i + 1);
    const int p = parent[at(s, i)];
    s &= ~(std::size_t{1} << i);
    i = p;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());
  return {best, order};
}

// Reference check for Held-Karp: every ordering of the non-depot nodes.
inline Length permutation_brute_force(const MetricClosure& mc, int max_nodes = 9) {
  const int n = mc.size();
  if (n > max_nodes) throw BudgetExceeded("permutation brute force limited to " + std::to_string(max_nodes) + " nodes");
  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  Length best = std::numeric_limits<Length>::max();
  do {
    Length len = 0;
    int prev = 0;
    for (int v : perm) {
      len += mc(prev, v);
      prev = v;
    }
    len += mc(prev, 0);
    best = std::min(best, len);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline OracleResult solve_sprp_oracle(const Instance& inst) {
  const auto g = build_graph(inst.layout);
  const auto terms = terminal_vertices(g, inst);
  if (static_cast<int>(terms.size()) > held_karp_max_nodes)
    throw BudgetExceeded("oracle budget exceeded: " + std::to_string(terms.size() - 1) + " required cells, limit " +
                         std::to_string(held_karp_max_nodes - 1));
  const auto mc = apsp(g, terms);
  auto [len, order] = held_karp(mc);
  OracleResult r;
  r.objective = len;
  for (int i : order) r.order.push_back(terms[static_cast<std::size_t>(i)]);
  for (int j = 0; j < static_cast<int>(inst.required.size()); ++j)
    for (int c : inst.required[static_cast<std::size_t>(j)]) r.positions.emplace_back(j, c);
  return r;
}

// All picks in the depot aisle: walk out and back over the covered range.
inline Length solve_single_aisle(const Instance& inst) {
  const auto& L = inst.layout;
  const Length yd = L.cross_y(L.depot_cross);
  Length lo = yd, hi = yd;
  for (int j = 0; j < static_cast<int>(inst.required.size()); ++j) {
    const auto& cells = inst.required[static_cast<std::size_t>(j)];
    if (cells.empty()) continue;
    if (j != L.depot_aisle) throw ValidationError("required", "closed form needs all picks in the depot aisle");
    for (int c : cells) {
      lo = std::min(lo, L.cell_y(c));
      hi = std::max(hi, L.cell_y(c));
    }
  }
  return 2 * (hi - lo);
}

inline constexpr std::int64_t gtsp_budget = 100000;

// Inclusion-minimal subsets of offers whose quantities reach the demand.
inline std::vector<std::vector<std::pair<int, int>>> minimal_covers(const std::vector<SupplyEntry>& offers,
                                                                    std::int64_t demand) {
  std::vector<std::vector<std::pair<int, int>>> out;
  const auto n = offers.size();
  if (n > 20) throw BudgetExceeded("too many positions for one SKU: " + std::to_string(n));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sum += offers[i].qty;
    if (sum < demand) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((mask >> i & 1) && sum - offers[i].qty >= demand) minimal = false;
    if (!minimal) continue;
    std::vector<std::pair<int, int>> cover;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) cover.emplace_back(offers[i].aisle, offers[i].cell);
    out.push_back(std::move(cover));
  }
  return out;
}

// Exhaustive choice of pick positions, each choice solved by Held-Karp.
inline OracleResult solve_sprp_ss_oracle(const ScatteredInstance& inst) {
  inst.validate();
  std::vector<std::vector<std::vector<std::pair<int, int>>>> options;
  std::int64_t product = 1;
  for (const auto& h : inst.skus) {
    auto covers = minimal_covers(inst.positions_of(h), inst.demand.at(h));
    if (covers.empty()) throw ValidationError("demand", "SKU " + h + " cannot be covered");
    product *= static_cast<std::int64_t>(covers.size());
    if (product > gtsp_budget)
      throw BudgetExceeded("position choices exceed " + std::to_string(gtsp_budget));
    options.push_back(std::move(covers));
  }
  std::map<std::set<std::pair<int, int>>, Length> cache;
  OracleResult best;
  best.objective = std::numeric_limits<Length>::max();
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    std::set<std::pair<int, int>> chosen;
    for (std::size_t h = 0; h < options.size(); ++h)
      for (const auto& p : options[h][pick[h]]) chosen.insert(p);
    if (!cache.count(chosen)) {
      const auto induced = induced_instance(inst.layout, {chosen.begin(), chosen.end()});
      auto r = solve_sprp_oracle(induced);
      cache[chosen] = r.objective;
      if (r.objective < best.objective) {
        best = std::move(r);
        best.positions.assign(chosen.begin(), chosen.end());
      }
    }
    std::size_t h = 0;
    while (h < options.size() && ++pick[h] == options[h].size()) pick[h++] = 0;
    if (h == options.size()) break;
  }
  return best;
}

}  // namespace sprp
