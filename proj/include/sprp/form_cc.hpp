#pragma once

#include "sprp/formulation.hpp"

namespace sprp {

namespace detail {

inline BuiltModel build_cc(RoutingData data, const CostModel& cm) {
  require_single_block(data, "CC");
  BuiltModel bm;
  bm.formulation = Formulation::CC;
  bm.data = std::move(data);
  bm.model.formulation = "CC";
  bm.model.instance_id = bm.data.id;
  const auto& d = bm.data;
  auto& mdl = bm.model;
  const int l = d.depot_aisle();
  const bool top = d.layout.depot_on_top();

  const ConfigVars v = declare_config_vars(bm, cm, false);
  std::vector<int> pi(static_cast<std::size_t>(d.layout.num_aisles), -1);
  for (int j = d.lo; j <= d.hi; ++j)
    pi[static_cast<std::size_t>(j)] = bm.add_bin({Role::parity, j}, "CC.pi" + idx(j));

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

  // branch-and-pick needs the cross connected horizontally
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

  // no switch between bottom-only and top-only across an aisle
  for (int j = d.lo + 1; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    mdl.add_constraint("switch", "switch_bt" + idx(j),
                       Expr().add(v.b2[u - 1]).add(v.at(v.t2, j)).terms, Sense::le, 1);
    mdl.add_constraint("switch", "switch_tb" + idx(j),
                       Expr().add(v.t2[u - 1]).add(v.at(v.b2, j)).terms, Sense::le, 1);
  }

  // depot inclusion
  {
    Expr e;
    const int left = l - 1 >= d.lo ? l - 1 : -1;
    const int right = l < d.hi ? l : -1;
    for (int g : {left, right}) {
      if (g < 0) continue;
      const auto u = static_cast<std::size_t>(g);
      if (top) e.add(v.s[u]).add(v.t2[u]).add(v.d[u]).sub(v.b2[u]);
      else e.add(v.s[u]).add(v.b2[u]).add(v.d[u]).sub(v.t2[u]);
    }
    mdl.add_constraint("depot", "depot", e.terms, Sense::ge, 0);
  }

  // parity
  for (int j = d.lo; j <= d.hi; ++j) {
    Expr e;
    e.add(v.at(v.s, j - 1)).add(v.at(v.s, j)).add(v.pass[static_cast<std::size_t>(j)]);
    e.sub(pi[static_cast<std::size_t>(j)], 2);
    mdl.add_constraint("parity", "parity" + idx(j), e.terms, Sense::eq, 0);
  }

  // components
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    Expr e;
    e.add(v.at(v.d, j)).sub(v.at(v.s, j - 1)).sub(v.at(v.d, j - 1)).sub(v.tau[u]);
    mdl.add_constraint("components", "components" + idx(j), e.terms, Sense::le, 0);
  }
  for (int j = d.lo + 1; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    mdl.add_constraint("propagate", "propagate" + idx(j),
                       Expr().add(v.tau[u - 1]).sub(v.at(v.s, j)).sub(v.tau[u]).terms, Sense::le, 0);
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

inline BuiltModel build_cc_sprp(const Instance& inst, const CostModel& cm) {
  return detail::build_cc(routing_data(inst), cm);
}
inline BuiltModel build_cc_sprp(const Instance& inst) {
  auto d = routing_data(inst);
  return detail::build_cc(d, cost_model(d));
}

inline BuiltModel build_cc_sprp_ss(const ScatteredInstance& inst, const CostModel& cm) {
  return detail::build_cc(routing_data(inst), cm);
}
inline BuiltModel build_cc_sprp_ss(const ScatteredInstance& inst) {
  auto d = routing_data(inst);
  return detail::build_cc(d, cost_model(d));
}

}  // namespace sprp
