#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "sprp/errors.hpp"

namespace sprp {

using Length = std::int64_t;

// Rectangular warehouse: parallel aisles j = 0..m-1 (left to right) crossed by
// num_crosses cross-aisles k = 0..n_K-1 (bottom to top). Cells are numbered
// per aisle bottom to top across all blocks; block b owns the global cell
// indices [b * cells_per_subaisle, (b + 1) * cells_per_subaisle).
//
// The depot sits on the intersection vertex (depot_aisle, depot_cross) and
// depot_cross is always a boundary cross-aisle.
struct Layout {
  int num_aisles = 1;
  int num_crosses = 2;
  int cells_per_subaisle = 90;
  Length aisle_pitch = 5;
  Length cell_pitch = 1;
  Length cross_offset = 1;
  int depot_aisle = 0;
  int depot_cross = 0;

  bool operator==(const Layout&) const = default;

  int num_blocks() const { return num_crosses - 1; }
  int cells_per_aisle() const { return num_blocks() * cells_per_subaisle; }
  bool two_block() const { return num_crosses == 3; }
  bool depot_on_top() const { return depot_cross == num_crosses - 1; }

  // Distance between the two cross-aisles bounding one subaisle.
  Length subaisle_length() const {
    return static_cast<Length>(cells_per_subaisle - 1) * cell_pitch + 2 * cross_offset;
  }

  int block_of(int cell) const { return cell / cells_per_subaisle; }
  int local_index(int cell) const { return cell % cells_per_subaisle; }
  int lower_cross_of(int cell) const { return block_of(cell); }
  int upper_cross_of(int cell) const { return block_of(cell) + 1; }

  Length cross_y(int cross) const { return static_cast<Length>(cross) * subaisle_length(); }
  Length cell_y(int cell) const {
    return cross_y(block_of(cell)) + cross_offset +
           static_cast<Length>(local_index(cell)) * cell_pitch;
  }
  Length aisle_x(int aisle) const { return static_cast<Length>(aisle) * aisle_pitch; }

  void check_cell(int cell) const {
    if (cell < 0 || cell >= cells_per_aisle())
      throw RangeError("cell index " + std::to_string(cell) + " outside [0, " +
                       std::to_string(cells_per_aisle()) + ")");
  }
  void check_aisle(int aisle) const {
    if (aisle < 0 || aisle >= num_aisles)
      throw RangeError("aisle index " + std::to_string(aisle) + " outside [0, " +
                       std::to_string(num_aisles) + ")");
  }

  void validate() const {
    if (num_aisles < 1) throw ValidationError("num_aisles", "must be >= 1");
    if (num_crosses != 2 && num_crosses != 3)
      throw ValidationError("num_crosses", "must be 2 (single-block) or 3 (two-block)");
    if (cells_per_subaisle < 1) throw ValidationError("cells_per_subaisle", "must be >= 1");
    if (aisle_pitch <= 0) throw ValidationError("aisle_pitch", "must be a positive integer");
    if (cell_pitch <= 0) throw ValidationError("cell_pitch", "must be a positive integer");
    if (cross_offset <= 0) throw ValidationError("cross_offset", "must be a positive integer");
    if (depot_aisle < 0 || depot_aisle >= num_aisles)
      throw ValidationError("depot_aisle", "must lie in [0, num_aisles)");
    if (depot_cross != 0 && depot_cross != num_crosses - 1)
      throw ValidationError("depot_cross", "must be a boundary cross-aisle (0 or num_crosses-1)");
  }
};

inline void to_json(nlohmann::json& j, const Layout& l) {
  j = nlohmann::json{{"num_aisles", l.num_aisles},
                     {"num_crosses", l.num_crosses},
                     {"cells_per_subaisle", l.cells_per_subaisle},
                     {"aisle_pitch", l.aisle_pitch},
                     {"cell_pitch", l.cell_pitch},
                     {"cross_offset", l.cross_offset},
                     {"depot_aisle", l.depot_aisle},
                     {"depot_cross", l.depot_cross}};
}

namespace detail {

template <typename T>
T require_field(const nlohmann::json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + "." + key + ": missing field");
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + "." + key + ": " + e.what());
  }
}

}  // namespace detail

inline Layout layout_from_json(const nlohmann::json& j, const std::string& where = "layout") {
  Layout l;
  l.num_aisles = detail::require_field<int>(j, "num_aisles", where);
  l.num_crosses = detail::require_field<int>(j, "num_crosses", where);
  l.cells_per_subaisle = detail::require_field<int>(j, "cells_per_subaisle", where);
  l.aisle_pitch = detail::require_field<Length>(j, "aisle_pitch", where);
  l.cell_pitch = detail::require_field<Length>(j, "cell_pitch", where);
  l.cross_offset = detail::require_field<Length>(j, "cross_offset", where);
  l.depot_aisle = detail::require_field<int>(j, "depot_aisle", where);
  l.depot_cross = detail::require_field<int>(j, "depot_cross", where);
  try {
    l.validate();
  } catch (const ValidationError& e) {
    throw ParseError(where + "." + e.what());
  }
  return l;
}

}  // namespace sprp
