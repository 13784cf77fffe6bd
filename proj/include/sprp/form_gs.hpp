#pragma once

#include "sprp/formulation.hpp"

namespace sprp {

struct GsOptions {
  // Depot inclusion with the previous-gap terms in swapped orientation.
  // Off by default: that variant is not exact in either direction.
  bool swap_previous_gap_depot = false;
};

namespace detail {

inline BuiltModel build_gs(RoutingData data, const CostModel& cm, const GsOptions& opt) {
  require_single_block(data, "GS");
  BuiltModel bm;
  bm.formulation = Formulation::GS;
  bm.data = std::move(data);
  bm.model.formulation = "GS";
  bm.model.instance_id = bm.data.id;
  const auto& d = bm.data;
  auto& mdl = bm.model;
  const int l = d.depot_aisle();
  const bool top = d.layout.depot_on_top();

  const ConfigVars v = declare_config_vars(bm, cm, true);
  const auto m = static_cast<std::size_t>(d.layout.num_aisles);
  std::vector<int> pitop(m, -1), pibot(m, -1);
  for (int j = d.lo; j <= d.hi; ++j) {
    pitop[static_cast<std::size_t>(j)] = bm.add({Role::parity, j, 1}, "GS.pitop" + idx(j), VarKind::integer, 0, 4);
    pibot[static_cast<std::size_t>(j)] = bm.add({Role::parity, j, 0}, "GS.pibot" + idx(j), VarKind::integer, 0, 4);
  }

  if (!d.scattered) {
    for (int j = d.lo; j < d.hi; ++j)
      mdl.add_constraint("config", "config" + idx(j), v.all(j).terms, Sense::eq, 1);
    for (int j = d.lo; j <= d.hi; ++j) {
      const auto u = static_cast<std::size_t>(j);
      for (std::size_t t = 0; t < d.cells[u].size(); ++t)
        mdl.add_constraint("coverage", "coverage" + idx(j, d.cells[u][t]),
                           coverage_expr(d, v, j, t).terms, Sense::ge, 1);
    }
  } else {
    add_config_scattered(bm, v);
  }

  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (std::size_t t = 0; t < d.cells[u].size(); ++t) {
      const int c = d.cells[u][t];
      if (top || j != l) {
        Expr e = v.bottom(j - 1);
        e.append(v.bottom(j)).sub(v.p[u][t]);
        mdl.add_constraint("bottom_connect", "bottom_connect" + idx(j, c), e.terms, Sense::ge, 0);
      }
      if (!top || j != l) {
        Expr e = v.top(j - 1);
        e.append(v.top(j)).sub(v.q[u][t]);
        mdl.add_constraint("top_connect", "top_connect" + idx(j, c), e.terms, Sense::ge, 0);
      }
    }
  }

  // bottom-only to top-only needs a double pass
  for (int j = d.lo + 1; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    mdl.add_constraint("switch", "switch_bt" + idx(j),
                       Expr().add(v.b2[u - 1]).add(v.at(v.t2, j)).sub(v.pass2[u]).terms, Sense::le, 1);
    mdl.add_constraint("switch", "switch_tb" + idx(j),
                       Expr().add(v.t2[u - 1]).add(v.at(v.b2, j)).sub(v.pass2[u]).terms, Sense::le, 1);
  }

  // depot inclusion
  {
    const auto ul = static_cast<std::size_t>(l);
    const int left = l - 1 >= d.lo ? l - 1 : -1;
    const int right = l < d.hi ? l : -1;
    Expr e;
    e.add(v.pass2[ul], 2).add(v.pass[ul]);
    // own side: configurations that reach the depot cross, minus those that avoid it
    const auto& reach_here = top ? v.t2 : v.b2;
    const auto& avoid_here = top ? v.b2 : v.t2;
    if (right >= 0) {
      e.add(v.at(reach_here, right)).add(v.at(v.d, right));
      e.sub(v.at(avoid_here, right));
    }
    if (left >= 0) {
      const auto& reach_left = opt.swap_previous_gap_depot ? avoid_here : reach_here;
      const auto& avoid_left = opt.swap_previous_gap_depot ? reach_here : avoid_here;
      e.add(v.at(reach_left, left)).add(v.at(v.d, left));
      e.sub(v.at(avoid_left, left));
    }
    mdl.add_constraint("depot", "depot", e.terms, Sense::ge, 0);
  }

  // parity at top and bottom
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int side = 0; side < 2; ++side) {
      const auto& own = side == 1 ? v.t2 : v.b2;
      Expr e;
      for (int g : {j - 1, j}) {
        e.add(v.at(v.s, g)).add(v.at(v.d, g), 2).add(v.at(own, g), 2);
      }
      e.add(v.pass[u]).add(v.pass2[u], 2);
      e.sub(side == 1 ? pitop[u] : pibot[u], 2);
      mdl.add_constraint("parity", std::string(side == 1 ? "parity_top" : "parity_bottom") + idx(j),
                         e.terms, Sense::eq, 0);
    }
  }

  for (int j = d.lo + 1; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    Expr e;
    e.add(v.at(v.d, j)).add(v.b2[u - 1]).add(v.t2[u - 1]).sub(v.pass2[u]).sub(v.tau[u]);
    mdl.add_constraint("components", "components" + idx(j), e.terms, Sense::le, 1);
  }
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    Expr e;
    e.add(v.at(v.d, j)).sub(v.at(v.d, j - 1)).sub(v.at(v.b2, j - 1)).sub(v.at(v.t2, j - 1));
    e.sub(v.pass2[u]).sub(v.pass[u]).sub(v.tau[u]);
    mdl.add_constraint("components_unvisited", "components_unvisited" + idx(j), e.terms, Sense::le, 0);
  }
  for (int j = d.lo + 1; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    mdl.add_constraint("propagate", "propagate" + idx(j),
                       Expr().add(v.tau[u - 1]).sub(v.pass[u]).sub(v.pass2[u]).sub(v.tau[u]).terms,
                       Sense::le, 0);
  }
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    mdl.add_constraint("two_components", "two_components" + idx(j),
                       Expr().add(v.tau[u]).sub(v.at(v.d, j)).terms, Sense::le, 0);
  }
  mdl.seal();
  return bm;
}

}  // namespace detail

inline BuiltModel build_gs_sprp(const Instance& inst, const CostModel& cm, const GsOptions& opt = {}) {
  return detail::build_gs(routing_data(inst), cm, opt);
}
inline BuiltModel build_gs_sprp(const Instance& inst) {
  auto d = routing_data(inst);
  return detail::build_gs(d, cost_model(d), {});
}

inline BuiltModel build_gs_sprp_ss(const ScatteredInstance& inst, const CostModel& cm,
                                   const GsOptions& opt = {}) {
  return detail::build_gs(routing_data(inst), cm, opt);
}
inline BuiltModel build_gs_sprp_ss(const ScatteredInstance& inst) {
  auto d = routing_data(inst);
  return detail::build_gs(d, cost_model(d), {});
}

}  // namespace sprp
