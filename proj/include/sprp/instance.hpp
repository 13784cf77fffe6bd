#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sprp/layout.hpp"

namespace sprp {

inline constexpr int instance_format_version = 1;

// Standard SPRP: a fixed set of required cells per aisle.
struct Instance {
  Layout layout;
  std::vector<std::vector<int>> required;  // per aisle, ascending
  nlohmann::json provenance = nlohmann::json::object();

  bool operator==(const Instance& o) const {
    return layout == o.layout && required == o.required && provenance == o.provenance;
  }

  int num_required() const {
    int n = 0;
    for (const auto& r : required) n += static_cast<int>(r.size());
    return n;
  }

  std::string id() const { return provenance.value("id", std::string{}); }

  // Normalizes `required` (one list per aisle, sorted, unique) and checks ranges.
  void validate() {
    layout.validate();
    if (static_cast<int>(required.size()) > layout.num_aisles)
      throw ValidationError("required", "more aisle lists than aisles");
    required.resize(static_cast<std::size_t>(layout.num_aisles));
    for (auto& list : required) {
      for (int c : list) layout.check_cell(c);
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw ValidationError("required", "duplicate cell in an aisle");
    }
  }
};

struct SupplyEntry {
  int aisle = 0;
  int cell = 0;
  std::string sku;
  std::int64_t qty = 1;

  bool operator==(const SupplyEntry&) const = default;
};

// SPRP with scattered storage: requested SKUs with demands and their supply
// positions. Only supply of requested SKUs is stored.
struct ScatteredInstance {
  Layout layout;
  std::vector<std::string> skus;
  std::map<std::string, std::int64_t> demand;
  std::vector<SupplyEntry> supply;
  nlohmann::json provenance = nlohmann::json::object();

  bool operator==(const ScatteredInstance& o) const {
    return layout == o.layout && skus == o.skus && demand == o.demand && supply == o.supply &&
           provenance == o.provenance;
  }

  std::string id() const { return provenance.value("id", std::string{}); }

  void validate() const {
    layout.validate();
    std::set<std::string> known(skus.begin(), skus.end());
    if (known.size() != skus.size()) throw ValidationError("skus", "duplicate SKU name");
    for (const auto& h : skus) {
      auto it = demand.find(h);
      if (it == demand.end()) throw ValidationError("demand", "no demand for SKU " + h);
      if (it->second < 1) throw ValidationError("demand", "demand of " + h + " must be >= 1");
    }
    for (const auto& [h, b] : demand)
      if (!known.count(h)) throw ValidationError("demand", "demand for unknown SKU " + h);
    std::map<std::string, std::int64_t> total;
    for (const auto& s : supply) {
      layout.check_aisle(s.aisle);
      layout.check_cell(s.cell);
      if (!known.count(s.sku)) throw ValidationError("supply", "supply of unknown SKU " + s.sku);
      if (s.qty < 0) throw ValidationError("supply", "negative quantity");
      total[s.sku] += s.qty;
    }
    for (const auto& h : skus)
      if (total[h] < demand.at(h))
        throw ValidationError("supply", "supply of " + h + " below its demand");
  }

  // Candidate cells per aisle: every position holding a requested SKU.
  std::vector<std::vector<int>> candidate_cells() const {
    std::vector<std::set<int>> sets(static_cast<std::size_t>(layout.num_aisles));
    for (const auto& s : supply)
      if (s.qty > 0) sets[static_cast<std::size_t>(s.aisle)].insert(s.cell);
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
  }

  // Positions (aisle, cell) with positive supply of SKU h.
  std::vector<SupplyEntry> positions_of(const std::string& h) const {
    std::vector<SupplyEntry> out;
    for (const auto& s : supply)
      if (s.sku == h && s.qty > 0) out.push_back(s);
    return out;
  }
};

// SPRP instance that visits exactly the given (aisle, cell) positions.
inline Instance induced_instance(const Layout& layout,
                                 const std::vector<std::pair<int, int>>& positions) {
  Instance inst;
  inst.layout = layout;
  inst.required.resize(static_cast<std::size_t>(layout.num_aisles));
  for (auto [a, c] : positions) inst.required[static_cast<std::size_t>(a)].push_back(c);
  for (auto& r : inst.required) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  inst.validate();
  return inst;
}

// When every requested SKU has exactly one supplying position that covers its
// demand, the scattered instance is an SPRP in disguise.
inline Instance induced_unique_instance(const ScatteredInstance& ss) {
  std::vector<std::pair<int, int>> pos;
  for (const auto& h : ss.skus) {
    auto p = ss.positions_of(h);
    if (p.size() != 1) throw ValidationError("supply", "SKU " + h + " is not stored uniquely");
    pos.emplace_back(p.front().aisle, p.front().cell);
  }
  Instance inst = induced_instance(ss.layout, pos);
  inst.provenance = ss.provenance;
  return inst;
}

using AnyInstance = std::variant<Instance, ScatteredInstance>;

// ---- serialization ----

inline nlohmann::json to_json(const Instance& inst) {
  nlohmann::json req = nlohmann::json::array();
  for (std::size_t j = 0; j < inst.required.size(); ++j)
    for (int c : inst.required[j]) req.push_back({static_cast<int>(j), c});
  return {{"version", instance_format_version},
          {"kind", "sprp"},
          {"layout", inst.layout},
          {"required", req},
          {"provenance", inst.provenance}};
}

inline nlohmann::json to_json(const ScatteredInstance& inst) {
  nlohmann::json sup = nlohmann::json::array();
  for (const auto& s : inst.supply)
    sup.push_back({{"aisle", s.aisle}, {"cell", s.cell}, {"sku", s.sku}, {"qty", s.qty}});
  nlohmann::json dem = nlohmann::json::object();
  for (const auto& [h, b] : inst.demand) dem[h] = b;
  return {{"version", instance_format_version},
          {"kind", "sprp-ss"},
          {"layout", inst.layout},
          {"skus", inst.skus},
          {"demand", dem},
          {"supply", sup},
          {"provenance", inst.provenance}};
}

inline nlohmann::json to_json(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return to_json(i); }, inst);
}

inline AnyInstance instance_from_json(const nlohmann::json& j) {
  using detail::require_field;
  const int version = require_field<int>(j, "version", "instance");
  if (version != instance_format_version)
    throw ParseError("instance.version: unsupported format version " + std::to_string(version));
  const auto kind = require_field<std::string>(j, "kind", "instance");
  if (!j.contains("layout")) throw ParseError("instance.layout: missing field");
  const Layout layout = layout_from_json(j.at("layout"), "instance.layout");
  nlohmann::json prov = j.value("provenance", nlohmann::json::object());

  try {
    if (kind == "sprp") {
      Instance inst;
      inst.layout = layout;
      inst.provenance = prov;
      inst.required.resize(static_cast<std::size_t>(layout.num_aisles));
      const auto req = require_field<nlohmann::json>(j, "required", "instance");
      if (!req.is_array()) throw ParseError("instance.required: expected an array");
      for (std::size_t n = 0; n < req.size(); ++n) {
        const auto& e = req[n];
        if (!e.is_array() || e.size() != 2)
          throw ParseError("instance.required[" + std::to_string(n) + "]: expected [aisle, cell]");
        const int a = e[0].get<int>();
        layout.check_aisle(a);
        inst.required[static_cast<std::size_t>(a)].push_back(e[1].get<int>());
      }
      inst.validate();
      return inst;
    }
    if (kind == "sprp-ss") {
      ScatteredInstance inst;
      inst.layout = layout;
      inst.provenance = prov;
      inst.skus = require_field<std::vector<std::string>>(j, "skus", "instance");
      const auto dem = require_field<nlohmann::json>(j, "demand", "instance");
      if (!dem.is_object()) throw ParseError("instance.demand: expected an object");
      for (auto it = dem.begin(); it != dem.end(); ++it)
        inst.demand[it.key()] = it.value().get<std::int64_t>();
      const auto sup = require_field<nlohmann::json>(j, "supply", "instance");
      if (!sup.is_array()) throw ParseError("instance.supply: expected an array");
      for (std::size_t n = 0; n < sup.size(); ++n) {
        const std::string where = "instance.supply[" + std::to_string(n) + "]";
        SupplyEntry s;
        s.aisle = require_field<int>(sup[n], "aisle", where);
        s.cell = require_field<int>(sup[n], "cell", where);
        s.sku = require_field<std::string>(sup[n], "sku", where);
        s.qty = require_field<std::int64_t>(sup[n], "qty", where);
        inst.supply.push_back(std::move(s));
      }
      inst.validate();
      return inst;
    }
  } catch (const ValidationError& e) {
    throw ParseError("instance." + std::string(e.what()));
  } catch (const RangeError& e) {
    throw ParseError(std::string("instance: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  throw ParseError("instance.kind: unknown kind '" + kind + "'");
}

inline std::string serialize(const AnyInstance& inst) { return to_json(inst).dump(2) + "\n"; }

inline void write_instance(const AnyInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << serialize(inst);
}

inline AnyInstance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace sprp
