#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sprp/formulation.hpp"
#include "sprp/graph.hpp"

namespace sprp {

// Edge multiset over the warehouse graph, multiplicities in {0,1,2}.
using CellList = std::vector<std::pair<int, int>>;  // (aisle, cell)

struct TourSubgraph {
  Layout layout;
  std::vector<int> multiplicity;  // per edge id
  Length weight = 0;

  int num_edge_copies() const {
    int n = 0;
    for (int m : multiplicity) n += m;
    return n;
  }
};

inline TourSubgraph empty_subgraph(const WarehouseGraph& g) {
  TourSubgraph s;
  s.layout = g.layout();
  s.multiplicity.assign(static_cast<std::size_t>(g.num_edges()), 0);
  return s;
}

namespace detail {

inline void add_run(TourSubgraph& s, const WarehouseGraph& g, int aisle, int from, int to, int copies) {
  for (EdgeId e : g.vertical_run(aisle, from, to)) s.multiplicity[static_cast<std::size_t>(e)] += copies;
}

// Chain position of the candidate below (above) cell c in its block, or of the
// block's cross.
inline int segment_floor(const WarehouseGraph& g, const std::vector<int>& cells, int c) {
  const auto& L = g.layout();
  int pos = g.cross_position(L.block_of(c));
  for (int o : cells)
    if (o < c && L.block_of(o) == L.block_of(c)) pos = g.cell_position(o);
  return pos;
}
inline int segment_ceiling(const WarehouseGraph& g, const std::vector<int>& cells, int c) {
  const auto& L = g.layout();
  for (int o : cells)
    if (o > c && L.block_of(o) == L.block_of(c)) return g.cell_position(o);
  return g.cross_position(L.block_of(c) + 1);
}

}  // namespace detail

// Expands every active variable of a solved model into its edges.
inline TourSubgraph extract_subgraph(const BuiltModel& bm, const std::vector<Coef>& assignment) {
  const auto g = build_graph(bm.data.layout);
  auto s = empty_subgraph(g);
  const auto& L = g.layout();
  const int top_pos = g.vertices_per_aisle() - 1;
  for (std::size_t i = 0; i < bm.roles.size(); ++i) {
    const Coef val = assignment.at(i);
    if (val == 0) continue;
    const auto& r = bm.roles[i];
    const int copies = static_cast<int>(val);
    auto horiz = [&](int cross, int mult) {
      s.multiplicity[static_cast<std::size_t>(g.horizontal_edge(r.aisle, cross))] += mult * copies;
    };
    const auto& cells = bm.data.cells.empty() ? std::vector<int>{} : bm.data.cells[static_cast<std::size_t>(r.aisle < 0 ? 0 : r.aisle)];
    switch (r.role) {
      case Role::cfg_bottom2: horiz(0, 2); break;
      case Role::cfg_top2: horiz(1, 2); break;
      case Role::cfg_single: horiz(0, 1), horiz(1, 1); break;
      case Role::cfg_double: horiz(0, 2), horiz(1, 2); break;
      case Role::edge1: horiz(r.index, 1); break;
      case Role::edge2: horiz(r.index, 2); break;
      case Role::pass:
        if (r.index < 0) detail::add_run(s, g, r.aisle, 0, top_pos, copies);
        else detail::add_run(s, g, r.aisle, g.cross_position(r.index), g.cross_position(r.index + 1), copies);
        break;
      case Role::pass2: detail::add_run(s, g, r.aisle, 0, top_pos, 2 * copies); break;
      case Role::branch_p:
        detail::add_run(s, g, r.aisle, g.cross_position(L.block_of(r.cell)), g.cell_position(r.cell), 2 * copies);
        break;
      case Role::branch_q:
        detail::add_run(s, g, r.aisle, g.cell_position(r.cell), g.cross_position(L.block_of(r.cell) + 1), 2 * copies);
        break;
      case Role::seg_p:
        detail::add_run(s, g, r.aisle, detail::segment_floor(g, cells, r.cell), g.cell_position(r.cell), 2 * copies);
        break;
      case Role::seg_q:
        detail::add_run(s, g, r.aisle, g.cell_position(r.cell), detail::segment_ceiling(g, cells, r.cell), 2 * copies);
        break;
      case Role::pseudo_p: {
        int from = g.cross_position(0);
        for (int c : cells)
          if (L.block_of(c) == 0) from = g.cell_position(c);
        detail::add_run(s, g, r.aisle, from, g.cross_position(1), 2 * copies);
        break;
      }
      case Role::pseudo_q: {
        int to = g.cross_position(2);
        for (int c : cells)
          if (L.block_of(c) == 1) {
            to = g.cell_position(c);
            break;
          }
        detail::add_run(s, g, r.aisle, g.cross_position(1), to, 2 * copies);
        break;
      }
      default: break;
    }
  }
  for (std::size_t e = 0; e < s.multiplicity.size(); ++e) {
    if (s.multiplicity[e] > 2)
      throw InternalError("edge " + std::to_string(e) + " used " + std::to_string(s.multiplicity[e]) + " times");
    s.weight += s.multiplicity[e] * g.edge(static_cast<EdgeId>(e)).weight;
  }
  return s;
}

// Same, and checks the subgraph weight against the model objective.
inline TourSubgraph extract_subgraph(const BuiltModel& bm, const MipSolution& sol) {
  if (sol.status != SolveStatus::optimal || !sol.objective)
    throw ValidationError("solution", "extraction needs an optimal, verified solution");
  auto s = extract_subgraph(bm, sol.assignment);
  if (s.weight != *sol.objective)
    throw InternalError("subgraph weight " + std::to_string(s.weight) + " differs from objective " +
                        std::to_string(*sol.objective));
  return s;
}

// Cells picked by a solution: required cells for SPRP, visited ones for SS.
inline std::vector<std::pair<int, int>> picked_cells(const BuiltModel& bm, const std::vector<Coef>& assignment) {
  std::vector<std::pair<int, int>> out;
  if (!bm.data.scattered) {
    for (int j = 0; j < static_cast<int>(bm.data.cells.size()); ++j)
      for (int c : bm.data.cells[static_cast<std::size_t>(j)]) out.emplace_back(j, c);
    return out;
  }
  for (std::size_t i = 0; i < bm.roles.size(); ++i)
    if (bm.roles[i].role == Role::visit && assignment.at(i) != 0) out.emplace_back(bm.roles[i].aisle, bm.roles[i].cell);
  return out;
}

struct TourReport {
  bool connected = false;
  bool even = false;
  bool covers = false;
  bool depot_included = false;
  bool ok() const { return connected && even && covers && depot_included; }
};

inline TourReport validate(const TourSubgraph& s, const std::vector<std::pair<int, int>>& cells) {
  const auto g = build_graph(s.layout);
  TourReport rep;
  std::vector<int> degree(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int m = s.multiplicity[static_cast<std::size_t>(e)];
    degree[static_cast<std::size_t>(g.edge(e).u)] += m;
    degree[static_cast<std::size_t>(g.edge(e).v)] += m;
  }
  rep.even = std::all_of(degree.begin(), degree.end(), [](int d) { return d % 2 == 0; });

  const bool empty = s.num_edge_copies() == 0;
  rep.depot_included = empty ? cells.empty() : degree[static_cast<std::size_t>(g.depot())] > 0;
  rep.covers = true;
  for (auto [a, c] : cells)
    if (degree[static_cast<std::size_t>(g.cell(a, c))] == 0) rep.covers = false;

  // one component over vertices of positive degree
  VertexId start = -1;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (degree[static_cast<std::size_t>(v)] > 0) {
      start = v;
      break;
    }
  if (start < 0) {
    rep.connected = true;
    return rep;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<VertexId> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (const auto& inc : g.neighbors(u))
      if (s.multiplicity[static_cast<std::size_t>(inc.edge)] > 0 && !seen[static_cast<std::size_t>(inc.to)]) {
        seen[static_cast<std::size_t>(inc.to)] = 1;
        stack.push_back(inc.to);
      }
  }
  rep.connected = true;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (degree[static_cast<std::size_t>(v)] > 0 && !seen[static_cast<std::size_t>(v)]) rep.connected = false;
  return rep;
}

inline TourReport validate(const TourSubgraph& s, const Instance& inst) {
  std::vector<std::pair<int, int>> cells;
  for (int j = 0; j < static_cast<int>(inst.required.size()); ++j)
    for (int c : inst.required[static_cast<std::size_t>(j)]) cells.emplace_back(j, c);
  return validate(s, cells);
}

// Closed walk from the depot using every edge copy once. Neighbors are
// taken lowest vertex id first.
inline std::vector<VertexId> euler_tour(const TourSubgraph& s) {
  const auto rep = validate(s, CellList{});
  if (!rep.connected || !rep.even) throw ValidationError("subgraph", "Euler tour needs a connected, even subgraph");
  const auto g = build_graph(s.layout);
  if (s.num_edge_copies() == 0) return {g.depot()};
  if (!rep.depot_included) throw ValidationError("subgraph", "depot not on the subgraph");

  // adjacency over edge copies
  struct Arc {
    VertexId to;
    int copy;
  };
  std::vector<std::vector<Arc>> adj(static_cast<std::size_t>(g.num_vertices()));
  int copies = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (int k = 0; k < s.multiplicity[static_cast<std::size_t>(e)]; ++k) {
      const auto& ed = g.edge(e);
      adj[static_cast<std::size_t>(ed.u)].push_back({ed.v, copies});
      adj[static_cast<std::size_t>(ed.v)].push_back({ed.u, copies});
      ++copies;
    }
  for (auto& a : adj)
    std::stable_sort(a.begin(), a.end(), [](const Arc& x, const Arc& y) { return x.to < y.to; });
  std::vector<char> used(static_cast<std::size_t>(copies), 0);
  std::vector<std::size_t> next(adj.size(), 0);
  std::vector<VertexId> stack{g.depot()}, walk;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    auto& i = next[static_cast<std::size_t>(u)];
    const auto& a = adj[static_cast<std::size_t>(u)];
    while (i < a.size() && used[static_cast<std::size_t>(a[i].copy)]) ++i;
    if (i == a.size()) {
      walk.push_back(u);
      stack.pop_back();
    } else {
      used[static_cast<std::size_t>(a[i].copy)] = 1;
      stack.push_back(a[i].to);
    }
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

inline Length walk_length(const Layout& layout, const std::vector<VertexId>& walk) {
  const auto g = build_graph(layout);
  Length len = 0;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const VertexId a = walk[i], b = walk[i + 1];
    bool found = false;
    for (const auto& inc : g.neighbors(a))
      if (inc.to == b) {
        len += g.edge(inc.edge).weight;
        found = true;
        break;
      }
    if (!found) throw InternalError("walk steps between non-adjacent vertices");
  }
  return len;
}

// Plain SVG drawing of the subgraph over the warehouse outline.
inline std::string to_svg(const TourSubgraph& s, const std::vector<std::pair<int, int>>& cells = {}) {
  const auto g = build_graph(s.layout);
  const double scale = 4.0, pad = 10.0;
  const auto& L = s.layout;
  const double w = static_cast<double>(L.aisle_x(L.num_aisles - 1)) * scale + 2 * pad;
  const double h = static_cast<double>(L.cross_y(L.num_crosses - 1)) * scale + 2 * pad;
  auto px = [&](VertexId v) { return pad + static_cast<double>(g.x_of(v)) * scale; };
  auto py = [&](VertexId v) { return h - pad - static_cast<double>(g.y_of(v)) * scale; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    const int m = s.multiplicity[static_cast<std::size_t>(e)];
    out << "<line x1=\"" << px(ed.u) << "\" y1=\"" << py(ed.u) << "\" x2=\"" << px(ed.v) << "\" y2=\"" << py(ed.v)
        << "\" stroke=\"" << (m == 0 ? "#ddd" : m == 1 ? "#36c" : "#c33") << "\" stroke-width=\"" << (m == 0 ? 1 : 2)
        << "\"/>\n";
  }
  for (auto [a, c] : cells) {
    const VertexId v = g.cell(a, c);
    out << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"3\" fill=\"#090\"/>\n";
  }
  out << "<rect x=\"" << px(g.depot()) - 4 << "\" y=\"" << py(g.depot()) - 4
      << "\" width=\"8\" height=\"8\" fill=\"#000\"/>\n</svg>\n";
  return out.str();
}

}  // namespace sprp
