#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sprp/costs.hpp"
#include "sprp/instance.hpp"
#include "sprp/mip.hpp"

namespace sprp {

enum class Formulation { GS, CC, EC };

inline const char* to_string(Formulation f) {
  switch (f) {
    case Formulation::GS: return "GS";
    case Formulation::CC: return "CC";
    case Formulation::EC: return "EC";
  }
  return "?";
}

inline Formulation parse_formulation(const std::string& s) {
  if (s == "GS" || s == "gs") return Formulation::GS;
  if (s == "CC" || s == "cc") return Formulation::CC;
  if (s == "EC" || s == "ec") return Formulation::EC;
  throw ValidationError("formulation", "unknown formulation '" + s + "'");
}

// What a variable means on the warehouse graph. `aisle` is absolute; `index`
// is a cross for edges, a block for EC passes, a pair for connectivity.
enum class Role {
  other,
  cfg_bottom2,  // bottom cross traversed twice, top unused
  cfg_top2,     // top cross traversed twice, bottom unused
  cfg_single,   // both crosses once
  cfg_double,   // both crosses twice
  pass,         // full traversal once
  pass2,        // full traversal twice (GS only)
  branch_p,     // doubled run from the bottom cross of the block up to the cell
  branch_q,     // doubled run from the top cross of the block down to the cell
  edge1,        // one copy of the horizontal edge (gap=aisle, cross=index)
  edge2,        // two copies
  seg_p,        // doubled segment from the next candidate or cross below
  seg_q,        // doubled segment up to the next candidate or cross above
  pseudo_p,     // doubled segment below the middle cross of the depot aisle
  pseudo_q,     // doubled segment above the middle cross of the depot aisle
  visit,
  active,
  parity,
  tau,
  eta,
  conn_r,
  conn_rho,
  conn_z,
};

struct VarRole {
  Role role = Role::other;
  int aisle = -1;
  int index = -1;
  int cell = -1;
};

struct FormulationOptions {
  bool ec_cross_bound = true;  // at most one of single/double per cross
  bool ec_edge_pairs = true;   // even number of horizontal edges per gap
};

struct SkuOffer {
  int aisle;
  int cell;
  Coef qty;
};

// Everything a builder needs, independent of the instance kind.
struct RoutingData {
  Layout layout;
  bool scattered = false;
  int lo = 0;  // first aisle of the modelled window
  int hi = 0;  // last aisle of the modelled window
  std::vector<std::vector<int>> cells;  // candidate cells per aisle (absolute index)
  std::vector<std::string> skus;
  std::vector<Coef> demand;
  std::vector<std::vector<SkuOffer>> offers;  // per SKU
  std::string id;

  int depot_aisle() const { return layout.depot_aisle; }
  bool single_aisle() const { return lo == hi; }
  std::vector<int> cells_in_block(int aisle, int block) const {
    std::vector<int> out;
    for (int c : cells[static_cast<std::size_t>(aisle)])
      if (layout.block_of(c) == block) out.push_back(c);
    return out;
  }
};

// SPRP: the window spans the depot aisle and all aisles holding required
// cells; aisles beyond it never pay off in a rectangular layout.
inline RoutingData routing_data(const Instance& inst) {
  RoutingData d;
  d.layout = inst.layout;
  d.layout.validate();
  d.cells = inst.required;
  d.cells.resize(static_cast<std::size_t>(d.layout.num_aisles));
  d.lo = d.hi = d.layout.depot_aisle;
  for (int j = 0; j < d.layout.num_aisles; ++j)
    if (!d.cells[static_cast<std::size_t>(j)].empty()) {
      d.lo = std::min(d.lo, j);
      d.hi = std::max(d.hi, j);
    }
  d.id = inst.id();
  return d;
}

// SPRP-SS: the whole warehouse is modelled; aisle activation decides the span.
inline RoutingData routing_data(const ScatteredInstance& inst) {
  RoutingData d;
  d.layout = inst.layout;
  d.layout.validate();
  d.scattered = true;
  d.cells = inst.candidate_cells();
  d.lo = 0;
  d.hi = d.layout.num_aisles - 1;
  for (const auto& h : inst.skus) {
    d.skus.push_back(h);
    d.demand.push_back(inst.demand.at(h));
    std::vector<SkuOffer> off;
    for (const auto& s : inst.positions_of(h)) off.push_back({s.aisle, s.cell, s.qty});
    d.offers.push_back(std::move(off));
  }
  d.id = inst.id();
  return d;
}

inline CostModel cost_model(const RoutingData& d) { return cost_model(d.layout, d.cells); }

struct BuiltModel {
  Formulation formulation = Formulation::CC;
  MipModel model;
  std::vector<VarRole> roles;
  RoutingData data;

  int add(VarRole role, std::string name, VarKind kind, Coef lb, Coef ub, Coef obj = 0) {
    const int id = model.add_variable(std::move(name), kind, lb, ub, obj);
    roles.push_back(role);
    return id;
  }
  int add_bin(VarRole role, std::string name, Coef obj = 0) {
    return add(role, std::move(name), VarKind::binary, 0, 1, obj);
  }
};

namespace detail {

inline std::string idx(int a) { return "[" + std::to_string(a) + "]"; }
inline std::string idx(int a, int b) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}
inline std::string idx(int a, int b, int c) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

// Linear expression builder with +=/-= sugar.
struct Expr {
  std::vector<Term> terms;
  Expr& add(int var, Coef c = 1) {
    if (var >= 0) terms.push_back({var, c});
    return *this;
  }
  Expr& sub(int var, Coef c = 1) { return add(var, -c); }
  Expr& append(const Expr& o, Coef c = 1) {
    for (const auto& t : o.terms) terms.push_back({t.var, c * t.coef});
    return *this;
  }
};

}  // namespace detail

// Variables shared by the configuration-based single-block models.
struct ConfigVars {
  // per aisle (absolute index); -1 where absent
  std::vector<int> b2, t2, s, d;  // gap j, between aisles j and j+1
  std::vector<int> pass, pass2, tau, active;
  std::vector<std::vector<int>> p, q, x;  // per aisle, parallel to data.cells[aisle]

  // Variables configuring the bottom (top) cross on gap j, or empty.
  detail::Expr bottom(int j) const {
    detail::Expr e;
    if (j < 0 || j >= static_cast<int>(b2.size())) return e;
    e.add(b2[static_cast<std::size_t>(j)]).add(s[static_cast<std::size_t>(j)]).add(d[static_cast<std::size_t>(j)]);
    return e;
  }
  detail::Expr top(int j) const {
    detail::Expr e;
    if (j < 0 || j >= static_cast<int>(b2.size())) return e;
    e.add(t2[static_cast<std::size_t>(j)]).add(s[static_cast<std::size_t>(j)]).add(d[static_cast<std::size_t>(j)]);
    return e;
  }
  detail::Expr all(int j) const {
    detail::Expr e;
    if (j < 0 || j >= static_cast<int>(b2.size())) return e;
    e.add(b2[static_cast<std::size_t>(j)]).add(t2[static_cast<std::size_t>(j)]);
    e.add(s[static_cast<std::size_t>(j)]).add(d[static_cast<std::size_t>(j)]);
    return e;
  }
  int at(const std::vector<int>& v, int j) const {
    return j >= 0 && j < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(j)] : -1;
  }
};

namespace detail {

inline void require_single_block(const RoutingData& d, const char* who) {
  if (d.layout.num_crosses != 2)
    throw UnsupportedLayout(std::string(who) + " is defined for single-block layouts only");
}

// Declares configuration, pass, branch, component and (SS) visit variables.
inline ConfigVars declare_config_vars(BuiltModel& bm, const CostModel& cm, bool with_pass2) {
  const auto& d = bm.data;
  const std::string f = to_string(bm.formulation);
  const int m = d.layout.num_aisles;
  ConfigVars v;
  v.b2.assign(static_cast<std::size_t>(m), -1);
  v.t2 = v.s = v.d = v.b2;
  v.pass.assign(static_cast<std::size_t>(m), -1);
  v.pass2 = v.tau = v.active = v.pass;
  v.p.resize(static_cast<std::size_t>(m));
  v.q.resize(static_cast<std::size_t>(m));
  v.x.resize(static_cast<std::size_t>(m));

  for (int j = d.lo; j < d.hi; ++j) {
    const Coef c = cm.horiz_cost[static_cast<std::size_t>(j)];
    const auto u = static_cast<std::size_t>(j);
    v.b2[u] = bm.add_bin({Role::cfg_bottom2, j}, f + ".xx" + idx(j), 2 * c);
    v.t2[u] = bm.add_bin({Role::cfg_top2, j}, f + ".xb" + idx(j), 2 * c);
    v.s[u] = bm.add_bin({Role::cfg_single, j}, f + ".xbx" + idx(j), 2 * c);
    v.d[u] = bm.add_bin({Role::cfg_double, j}, f + ".xxb" + idx(j), 4 * c);
  }
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    v.pass[u] = bm.add_bin({Role::pass, j}, f + ".pass" + idx(j), cm.subaisle_cost);
    if (with_pass2)
      v.pass2[u] = bm.add_bin({Role::pass2, j}, f + ".pass2" + idx(j), 2 * cm.subaisle_cost);
  }
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    v.tau[u] = bm.add_bin({Role::tau, j}, f + ".tau" + idx(j));
  }
  // last aisle: a single component remains
  bm.model.fix(v.tau[static_cast<std::size_t>(d.hi)], 0);

  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int c : d.cells[u]) {
      const auto& cc = cm.at(j, c);
      v.p[u].push_back(bm.add_bin({Role::branch_p, j, -1, c}, f + ".p" + idx(j, c), cc.branch_from_below));
      v.q[u].push_back(bm.add_bin({Role::branch_q, j, -1, c}, f + ".q" + idx(j, c), cc.branch_from_above));
    }
  }
  if (d.scattered) {
    for (int j = d.lo; j <= d.hi; ++j) {
      const auto u = static_cast<std::size_t>(j);
      for (int c : d.cells[u]) v.x[u].push_back(bm.add_bin({Role::visit, j, -1, c}, f + ".x" + idx(j, c)));
    }
    for (int j = d.lo; j <= d.hi; ++j)
      v.active[static_cast<std::size_t>(j)] = bm.add_bin({Role::active, j}, f + ".xt" + idx(j));
    bm.model.fix(v.active[static_cast<std::size_t>(d.depot_aisle())], 1);
  }
  return v;
}

// Vertical coverage of candidate `t` of aisle j: a pass (and a double pass),
// a bottom branch reaching at least as high, or a top branch reaching at
// least as low.
inline Expr coverage_expr(const RoutingData& d, const ConfigVars& v, int j, std::size_t t) {
  const auto u = static_cast<std::size_t>(j);
  Expr e;
  e.add(v.pass[u]).add(v.pass2[u]);
  const auto& cells = d.cells[u];
  for (std::size_t t2 = 0; t2 < cells.size(); ++t2) {
    if (cells[t2] >= cells[t]) e.add(v.p[u][t2]);
    if (cells[t2] <= cells[t]) e.add(v.q[u][t2]);
  }
  return e;
}

// Demand coverage, visit linking and aisle activation shared by GS and CC.
inline void add_config_scattered(BuiltModel& bm, const ConfigVars& v) {
  const auto& d = bm.data;
  auto& mdl = bm.model;
  const int l = d.depot_aisle();
  for (std::size_t h = 0; h < d.skus.size(); ++h) {
    Expr e;
    for (const auto& o : d.offers[h]) {
      const auto& cells = d.cells[static_cast<std::size_t>(o.aisle)];
      const auto t = static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), o.cell) - cells.begin());
      e.add(v.x[static_cast<std::size_t>(o.aisle)][t], o.qty);
    }
    mdl.add_constraint("demand", "demand[" + d.skus[h] + "]", e.terms, Sense::ge, d.demand[h]);
  }
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (std::size_t t = 0; t < d.cells[u].size(); ++t) {
      Expr e = coverage_expr(d, v, j, t);
      e.sub(v.x[u][t]);
      mdl.add_constraint("visit", "visit" + idx(j, d.cells[u][t]), e.terms, Sense::ge, 0);
      mdl.add_constraint("aisle_active", "active_of" + idx(j, d.cells[u][t]),
                         Expr().add(v.active[u]).sub(v.x[u][t]).terms, Sense::ge, 0);
    }
  }
  for (int j = d.lo; j < d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    Expr e = v.all(j);
    if (j >= l) {
      e.sub(v.active[u + 1]);
      mdl.add_constraint("aisle_config", "aisle_config" + idx(j), e.terms, Sense::eq, 0);
      mdl.add_constraint("aisle_chain", "aisle_chain" + idx(j),
                         Expr().add(v.active[u]).sub(v.active[u + 1]).terms, Sense::ge, 0);
    } else {
      e.sub(v.active[u]);
      mdl.add_constraint("aisle_config", "aisle_config" + idx(j), e.terms, Sense::eq, 0);
      mdl.add_constraint("aisle_chain", "aisle_chain" + idx(j),
                         Expr().add(v.active[u]).sub(v.active[u + 1]).terms, Sense::le, 0);
    }
  }
}

}  // namespace detail

}  // namespace sprp
