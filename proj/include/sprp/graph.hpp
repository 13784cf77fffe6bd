#pragma once

#include <cassert>
#include <vector>

#include "sprp/layout.hpp"

namespace sprp {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u;
  VertexId v;
  Length weight;
};

// Undirected weighted graph of a rectangular warehouse. Vertex ids are
// aisle-major, bottom-up within an aisle: cross 0, the cells of block 0,
// cross 1, the cells of block 1, ... Vertical edges join consecutive
// vertices of an aisle; horizontal edges join v(j,k) and v(j+1,k).
// Vertical edges come first in edge-id order, then horizontal edges
// ordered by (gap, cross).
class WarehouseGraph {
public:
  explicit WarehouseGraph(const Layout& layout) : layout_(layout) {
    layout_.validate();
    per_aisle_ = layout_.num_crosses + layout_.cells_per_aisle();
    const int m = layout_.num_aisles;
    adjacency_.resize(static_cast<std::size_t>(m * per_aisle_));

    edges_.reserve(static_cast<std::size_t>(m * (per_aisle_ - 1) + (m - 1) * layout_.num_crosses));
    for (int j = 0; j < m; ++j) {
      for (int t = 0; t + 1 < per_aisle_; ++t) {
        const VertexId a = j * per_aisle_ + t;
        add_edge(a, a + 1, y_at_position(t + 1) - y_at_position(t));
      }
    }
    for (int j = 0; j + 1 < m; ++j)
      for (int k = 0; k < layout_.num_crosses; ++k)
        add_edge(intersection(j, k), intersection(j + 1, k), layout_.aisle_pitch);
  }

  const Layout& layout() const { return layout_; }
  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int vertices_per_aisle() const { return per_aisle_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  struct Incidence {
    VertexId to;
    EdgeId edge;
  };
  const std::vector<Incidence>& neighbors(VertexId v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }

  // Position of a cross or cell within its aisle's vertical chain.
  int cross_position(int k) const { return k * (layout_.cells_per_subaisle + 1); }
  int cell_position(int cell) const {
    return layout_.block_of(cell) * (layout_.cells_per_subaisle + 1) + 1 +
           layout_.local_index(cell);
  }

  VertexId intersection(int aisle, int cross) const {
    return aisle * per_aisle_ + cross_position(cross);
  }
  VertexId cell(int aisle, int cell) const { return aisle * per_aisle_ + cell_position(cell); }
  VertexId depot() const { return intersection(layout_.depot_aisle, layout_.depot_cross); }

  int aisle_of(VertexId v) const { return v / per_aisle_; }
  bool is_intersection(VertexId v) const {
    return (v % per_aisle_) % (layout_.cells_per_subaisle + 1) == 0;
  }

  Length x_of(VertexId v) const { return layout_.aisle_x(aisle_of(v)); }
  Length y_of(VertexId v) const { return y_at_position(v % per_aisle_); }

  // Vertical edge between chain positions t and t+1 of an aisle.
  EdgeId vertical_edge(int aisle, int t) const {
    assert(t >= 0 && t + 1 < per_aisle_);
    return aisle * (per_aisle_ - 1) + t;
  }
  EdgeId horizontal_edge(int gap, int cross) const {
    assert(gap >= 0 && gap + 1 < layout_.num_aisles);
    return layout_.num_aisles * (per_aisle_ - 1) + gap * layout_.num_crosses + cross;
  }

  // Vertical edges between two chain positions of one aisle, in either order.
  std::vector<EdgeId> vertical_run(int aisle, int from_pos, int to_pos) const {
    if (from_pos > to_pos) std::swap(from_pos, to_pos);
    std::vector<EdgeId> out;
    for (int t = from_pos; t < to_pos; ++t) out.push_back(vertical_edge(aisle, t));
    return out;
  }

private:
  Length y_at_position(int t) const {
    const int stride = layout_.cells_per_subaisle + 1;
    const int block = t / stride;
    const int offset = t % stride;
    if (offset == 0) return layout_.cross_y(block);
    return layout_.cell_y(block * layout_.cells_per_subaisle + offset - 1);
  }

  void add_edge(VertexId u, VertexId v, Length w) {
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, w});
    adjacency_[static_cast<std::size_t>(u)].push_back({v, id});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, id});
  }

  Layout layout_;
  int per_aisle_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

inline WarehouseGraph build_graph(const Layout& layout) { return WarehouseGraph(layout); }

}  // namespace sprp
