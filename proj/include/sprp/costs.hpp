#pragma once

#include <algorithm>
#include <vector>

#include "sprp/layout.hpp"

namespace sprp {

// Costs attached to one candidate cell of an aisle.
//
// branch_* are the configuration-model coefficients: a doubled trip from the
// bottom (top) cross-aisle of the cell's block to the cell, independent of any
// other candidate. segment_* are the edge-model coefficients: a doubled trip
// to the nearest candidate below (above) in the same block, or to the block's
// cross-aisle when there is none.
struct CellCosts {
  int cell = 0;
  Length branch_from_below = 0;
  Length branch_from_above = 0;
  Length segment_from_below = 0;
  Length segment_from_above = 0;
};

struct CostModel {
  std::vector<Length> horiz_cost;  // per aisle gap j (between j and j+1)
  Length subaisle_cost = 0;        // one traversal of a whole subaisle
  std::vector<std::vector<CellCosts>> cells;  // per aisle, ascending cell index

  const CellCosts& at(int aisle, int cell) const {
    const auto& row = cells.at(static_cast<std::size_t>(aisle));
    auto it = std::lower_bound(row.begin(), row.end(), cell,
                               [](const CellCosts& c, int v) { return c.cell < v; });
    if (it == row.end() || it->cell != cell)
      throw RangeError("no cost entry for aisle " + std::to_string(aisle) + " cell " +
                       std::to_string(cell));
    return *it;
  }
};

inline Length doubled_distance(Length a, Length b) { return 2 * (a > b ? a - b : b - a); }

// Computes every cost family for the given candidate cells. `positions[j]` must
// be strictly ascending; missing trailing aisles are treated as empty.
inline CostModel cost_model(const Layout& layout, const std::vector<std::vector<int>>& positions) {
  layout.validate();
  if (static_cast<int>(positions.size()) > layout.num_aisles)
    throw RangeError("position lists given for more aisles than the layout has");

  CostModel cm;
  cm.subaisle_cost = layout.subaisle_length();
  cm.horiz_cost.assign(static_cast<std::size_t>(std::max(0, layout.num_aisles - 1)),
                       layout.aisle_pitch);
  cm.cells.resize(static_cast<std::size_t>(layout.num_aisles));

  for (std::size_t j = 0; j < positions.size(); ++j) {
    const auto& list = positions[j];
    auto& row = cm.cells[j];
    row.reserve(list.size());
    for (std::size_t idx = 0; idx < list.size(); ++idx) {
      const int cell = list[idx];
      layout.check_cell(cell);
      if (idx > 0 && list[idx - 1] >= cell)
        throw ValidationError("positions", "cells of aisle " + std::to_string(j) +
                                               " must be strictly ascending");
      const int block = layout.block_of(cell);
      const Length y = layout.cell_y(cell);
      const Length y_low = layout.cross_y(block);
      const Length y_high = layout.cross_y(block + 1);

      CellCosts c;
      c.cell = cell;
      c.branch_from_below = doubled_distance(y, y_low);
      c.branch_from_above = doubled_distance(y_high, y);
      const bool has_below = idx > 0 && layout.block_of(list[idx - 1]) == block;
      const bool has_above = idx + 1 < list.size() && layout.block_of(list[idx + 1]) == block;
      c.segment_from_below =
          doubled_distance(y, has_below ? layout.cell_y(list[idx - 1]) : y_low);
      c.segment_from_above =
          doubled_distance(has_above ? layout.cell_y(list[idx + 1]) : y_high, y);
      row.push_back(c);
    }
  }
  return cm;
}

}  // namespace sprp
