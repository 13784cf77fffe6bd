#pragma once

#include "sprp/formulation.hpp"

namespace sprp {

// Partially built EC model: core constraints only, connectivity pending.
struct EcCore {
  BuiltModel bm;
  FormulationOptions opt;
  int K = 2;  // number of cross-aisles
  std::vector<std::vector<int>> x1, x2;    // [gap][cross]
  std::vector<std::vector<int>> pass;      // [aisle][block]
  std::vector<std::vector<int>> p, q, x;   // [aisle][candidate]
  std::vector<int> active;                 // [aisle] (SS)
  int pseudo = -1;                         // segment at the depot-aisle middle cross
  bool connectivity_added = false;

  detail::Expr horiz(int gap, int k) const {
    detail::Expr e;
    if (gap < bm.data.lo || gap >= bm.data.hi) return e;
    e.add(x1[static_cast<std::size_t>(gap)][static_cast<std::size_t>(k)]);
    e.add(x2[static_cast<std::size_t>(gap)][static_cast<std::size_t>(k)]);
    return e;
  }
  int single(int gap, int k) const {
    if (gap < bm.data.lo || gap >= bm.data.hi) return -1;
    return x1[static_cast<std::size_t>(gap)][static_cast<std::size_t>(k)];
  }
  int pass_of(int j, int block) const {
    if (block < 0 || block >= K - 1) return -1;
    return pass[static_cast<std::size_t>(j)][static_cast<std::size_t>(block)];
  }
};

namespace detail {

inline EcCore build_ec_core(RoutingData data, const CostModel& cm, const FormulationOptions& opt) {
  if (data.layout.num_crosses != 2 && data.layout.num_crosses != 3)
    throw UnsupportedLayout("EC supports one or two blocks");
  EcCore ec;
  ec.opt = opt;
  ec.K = data.layout.num_crosses;
  auto& bm = ec.bm;
  bm.formulation = Formulation::EC;
  bm.data = std::move(data);
  bm.model.formulation = "EC";
  bm.model.instance_id = bm.data.id;
  const auto& d = bm.data;
  const auto& L = d.layout;
  auto& mdl = bm.model;
  const int K = ec.K;
  const int l = d.depot_aisle();
  const int theta = L.depot_cross;
  const auto m = static_cast<std::size_t>(L.num_aisles);

  ec.x1.assign(m, std::vector<int>(static_cast<std::size_t>(K), -1));
  ec.x2 = ec.x1;
  ec.pass.assign(m, std::vector<int>(static_cast<std::size_t>(K - 1), -1));
  ec.p.resize(m);
  ec.q.resize(m);
  ec.x.resize(m);
  ec.active.assign(m, -1);

  for (int j = d.lo; j < d.hi; ++j)
    for (int k = 0; k < K; ++k) {
      const Coef c = cm.horiz_cost[static_cast<std::size_t>(j)];
      ec.x1[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          bm.add_bin({Role::edge1, j, k}, "EC.x1" + idx(j, k), c);
      ec.x2[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          bm.add_bin({Role::edge2, j, k}, "EC.x2" + idx(j, k), 2 * c);
    }
  for (int j = d.lo; j <= d.hi; ++j)
    for (int b = 0; b < K - 1; ++b)
      ec.pass[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] =
          bm.add_bin({Role::pass, j, b}, "EC.pass" + idx(j, b), cm.subaisle_cost);
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int c : d.cells[u]) {
      const auto& cc = cm.at(j, c);
      ec.p[u].push_back(bm.add_bin({Role::seg_p, j, L.block_of(c), c}, "EC.p" + idx(j, c), cc.segment_from_below));
      ec.q[u].push_back(bm.add_bin({Role::seg_q, j, L.block_of(c), c}, "EC.q" + idx(j, c), cc.segment_from_above));
    }
  }

  // middle cross of the depot aisle as an extra position toward the depot
  if (K == 3) {
    const auto lower = d.cells_in_block(l, 0);
    const auto upper = d.cells_in_block(l, 1);
    const Length ymid = L.cross_y(1);
    if (theta == 0) {
      const Length below = lower.empty() ? L.cross_y(0) : L.cell_y(lower.back());
      ec.pseudo = bm.add_bin({Role::pseudo_p, l, 0}, "EC.p" + idx(l) + "mid", 2 * (ymid - below));
    } else {
      const Length above = upper.empty() ? L.cross_y(2) : L.cell_y(upper.front());
      ec.pseudo = bm.add_bin({Role::pseudo_q, l, 1}, "EC.q" + idx(l) + "mid", 2 * (above - ymid));
    }
  }

  std::vector<int> eta(m, -1);
  if (opt.ec_edge_pairs)
    for (int j = d.lo; j < d.hi; ++j)
      eta[static_cast<std::size_t>(j)] =
          bm.add({Role::eta, j}, "EC.eta" + idx(j), VarKind::integer, d.scattered ? 0 : 1, K);
  std::vector<std::vector<int>> pi(m);
  for (int j = d.lo; j <= d.hi; ++j)
    for (int k = 0; k < K; ++k)
      pi[static_cast<std::size_t>(j)].push_back(
          bm.add({Role::parity, j, k}, "EC.pi" + idx(j, k), VarKind::integer, 0, 2));

  if (d.scattered) {
    for (int j = d.lo; j <= d.hi; ++j) {
      const auto u = static_cast<std::size_t>(j);
      for (int c : d.cells[u]) ec.x[u].push_back(bm.add_bin({Role::visit, j, -1, c}, "EC.x" + idx(j, c)));
    }
    for (int j = d.lo; j <= d.hi; ++j)
      ec.active[static_cast<std::size_t>(j)] = bm.add_bin({Role::active, j}, "EC.xt" + idx(j));
    mdl.fix(ec.active[static_cast<std::size_t>(l)], 1);
  }

  // optional: one of single/double per cross
  if (opt.ec_cross_bound)
    for (int j = d.lo; j < d.hi; ++j)
      for (int k = 0; k < K; ++k)
        mdl.add_constraint("cross_config", "cross_config" + idx(j, k), ec.horiz(j, k).terms, Sense::le, 1);

  // coverage: exactly one of pass, below segment, above segment
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (std::size_t t = 0; t < d.cells[u].size(); ++t) {
      const int c = d.cells[u][t];
      Expr e;
      e.add(ec.pass_of(j, L.block_of(c))).add(ec.p[u][t]).add(ec.q[u][t]);
      if (d.scattered) {
        e.sub(ec.x[u][t]);
        mdl.add_constraint("visit", "visit" + idx(j, c), e.terms, Sense::eq, 0);
      } else {
        mdl.add_constraint("coverage", "coverage" + idx(j, c), e.terms, Sense::eq, 1);
      }
    }
  }

  // chain propagation within a block
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    const auto& cells = d.cells[u];
    for (std::size_t t = 0; t + 1 < cells.size(); ++t) {
      if (L.block_of(cells[t]) != L.block_of(cells[t + 1])) continue;
      mdl.add_constraint("chain_below", "chain_below" + idx(j, cells[t + 1]),
                         Expr().add(ec.p[u][t + 1]).sub(ec.p[u][t]).terms, Sense::le, 0);
      mdl.add_constraint("chain_above", "chain_above" + idx(j, cells[t]),
                         Expr().add(ec.q[u][t]).sub(ec.q[u][t + 1]).terms, Sense::le, 0);
    }
  }
  if (ec.pseudo >= 0) {
    const auto u = static_cast<std::size_t>(l);
    const auto& cells = d.cells[u];
    if (theta == 0) {
      // last candidate of block 0
      int last = -1;
      for (std::size_t t = 0; t < cells.size(); ++t)
        if (L.block_of(cells[t]) == 0) last = static_cast<int>(t);
      if (last >= 0)
        mdl.add_constraint("chain_below", "chain_below" + idx(l) + "mid",
                           Expr().add(ec.pseudo).sub(ec.p[u][static_cast<std::size_t>(last)]).terms, Sense::le, 0);
    } else {
      int first = -1;
      for (std::size_t t = 0; t < cells.size(); ++t)
        if (L.block_of(cells[t]) == 1) {
          first = static_cast<int>(t);
          break;
        }
      if (first >= 0)
        mdl.add_constraint("chain_above", "chain_above" + idx(l) + "mid",
                           Expr().add(ec.pseudo).sub(ec.q[u][static_cast<std::size_t>(first)]).terms, Sense::le, 0);
    }
  }

  // branch-and-pick from a cross needs a horizontal edge there (depot excepted)
  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    const auto& cells = d.cells[u];
    for (int k = 0; k < K; ++k) {
      if (j == l && k == theta) continue;
      if (k <= K - 2) {
        // lowest candidate of the block above cross k
        for (std::size_t t = 0; t < cells.size(); ++t)
          if (L.block_of(cells[t]) == k) {
            Expr e = ec.horiz(j - 1, k);
            e.append(ec.horiz(j, k));
            if (ec.pseudo >= 0 && j == l && k == 1 && theta == 0) e.add(ec.pseudo);
            e.sub(ec.p[u][t]);
            mdl.add_constraint("bottom_connect", "bottom_connect" + idx(j, k), e.terms, Sense::ge, 0);
            break;
          }
      }
      if (k >= 1) {
        // highest candidate of the block below cross k
        for (std::size_t t = cells.size(); t-- > 0;)
          if (L.block_of(cells[t]) == k - 1) {
            Expr e = ec.horiz(j - 1, k);
            e.append(ec.horiz(j, k));
            if (ec.pseudo >= 0 && j == l && k == 1 && theta == K - 1) e.add(ec.pseudo);
            e.sub(ec.q[u][t]);
            mdl.add_constraint("top_connect", "top_connect" + idx(j, k), e.terms, Sense::ge, 0);
            break;
          }
      }
    }
  }

  // optional: even number of horizontal edges per gap
  for (int j = d.lo; j < d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    if (opt.ec_edge_pairs) {
      Expr e;
      for (int k = 0; k < K; ++k) e.add(ec.x1[u][static_cast<std::size_t>(k)]).add(ec.x2[u][static_cast<std::size_t>(k)], 2);
      e.sub(eta[u], 2);
      mdl.add_constraint("edge_pairs", "edge_pairs" + idx(j), e.terms, Sense::eq, 0);
    } else if (!d.scattered) {
      // every gap of the window carries an edge
      Expr e;
      for (int k = 0; k < K; ++k) e.append(ec.horiz(j, k));
      mdl.add_constraint("span", "span" + idx(j), e.terms, Sense::ge, 1);
    }
  }

  // depot inclusion: any horizontal edge at the depot aisle forces one on the depot cross
  {
    Expr at_depot = ec.horiz(l - 1, theta);
    at_depot.append(ec.horiz(l, theta));
    for (int k = 0; k < K; ++k) {
      if (k == theta) continue;
      for (int g : {l - 1, l}) {
        const Expr side = ec.horiz(g, k);
        if (side.terms.empty()) continue;
        Expr e = at_depot;
        e.append(side, -1);
        mdl.add_constraint("depot", "depot" + idx(g, k), e.terms, Sense::ge, 0);
      }
    }
  }

  // parity at every intersection
  for (int j = d.lo; j <= d.hi; ++j)
    for (int k = 0; k < K; ++k) {
      Expr e;
      e.add(ec.single(j, k)).add(ec.single(j - 1, k));
      e.add(ec.pass_of(j, k - 1)).add(ec.pass_of(j, k));
      e.sub(pi[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)], 2);
      mdl.add_constraint("parity", "parity" + idx(j, k), e.terms, Sense::eq, 0);
    }

  if (d.scattered) {
    for (std::size_t h = 0; h < d.skus.size(); ++h) {
      Expr e;
      for (const auto& o : d.offers[h]) {
        const auto& cells = d.cells[static_cast<std::size_t>(o.aisle)];
        const auto t = static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), o.cell) - cells.begin());
        e.add(ec.x[static_cast<std::size_t>(o.aisle)][t], o.qty);
      }
      mdl.add_constraint("demand", "demand[" + d.skus[h] + "]", e.terms, Sense::ge, d.demand[h]);
    }
    for (int j = d.lo; j <= d.hi; ++j) {
      const auto u = static_cast<std::size_t>(j);
      for (std::size_t t = 0; t < d.cells[u].size(); ++t)
        mdl.add_constraint("aisle_active", "active_of" + idx(j, d.cells[u][t]),
                           Expr().add(ec.active[u]).sub(ec.x[u][t]).terms, Sense::ge, 0);
    }
    for (int j = d.lo; j < d.hi; ++j) {
      const auto u = static_cast<std::size_t>(j);
      // edges of gap j exist only toward an active aisle away from the depot
      const int owner = j >= l ? ec.active[u + 1] : ec.active[u];
      Expr sum;
      for (int k = 0; k < K; ++k) {
        Expr e = ec.horiz(j, k);
        sum.append(e);
        e.sub(owner);
        mdl.add_constraint("aisle_upper", "aisle_upper" + idx(j, k), e.terms, Sense::le, 0);
      }
      sum.sub(owner);
      mdl.add_constraint("aisle_lower", "aisle_lower" + idx(j), sum.terms, Sense::ge, 0);
      mdl.add_constraint("aisle_chain", "aisle_chain" + idx(j),
                         Expr().add(ec.active[u]).sub(ec.active[u + 1]).terms,
                         j >= l ? Sense::ge : Sense::le, 0);
    }
  }
  return ec;
}

// Interior aisles: a cross with a left edge continues to the right, directly
// or through another cross. In SS models the walk may stop before the last
// aisle, so the requirement only holds while the next aisle is active.
inline void add_continuation(EcCore& ec, int j, const Expr& lhs, const Expr& left_edge,
                             const std::string& name) {
  auto& mdl = ec.bm.model;
  Expr e = lhs;
  e.append(left_edge, -1);
  Coef rhs = 0;
  if (ec.bm.data.scattered) {
    e.sub(ec.active[static_cast<std::size_t>(j + 1)]);
    rhs = -1;
  }
  mdl.add_constraint("next_aisle", name, e.terms, Sense::ge, rhs);
}

// Pair of crosses both entered from the left at aisle j must be connected
// there when nothing continues to the right.
inline void add_closing(EcCore& ec, int j, int k, int kk, int r, const std::string& name) {
  auto& mdl = ec.bm.model;
  const auto& d = ec.bm.data;
  Expr e = ec.horiz(j - 1, k);
  e.append(ec.horiz(j - 1, kk)).sub(r);
  if (j == d.hi) {
    mdl.add_constraint("last_aisle", name, e.terms, Sense::le, 1);
  } else if (d.scattered) {
    e.sub(ec.active[static_cast<std::size_t>(j + 1)]);
    mdl.add_constraint("last_aisle", name, e.terms, Sense::le, 1);
  }
}

}  // namespace detail

inline BuiltModel add_single_block_connectivity(EcCore ec) {
  using namespace detail;
  if (ec.K != 2) throw UnsupportedLayout("single-block connectivity needs two cross-aisles");
  auto& bm = ec.bm;
  auto& mdl = bm.model;
  const auto& d = bm.data;
  const auto m = static_cast<std::size_t>(d.layout.num_aisles);
  std::vector<int> r(m, -1), rho(m, -1);
  for (int j = d.lo; j <= d.hi; ++j)
    r[static_cast<std::size_t>(j)] = bm.add({Role::conn_r, j, 0}, "EC.r" + idx(j, 0, 1), VarKind::continuous, 0, 1);
  for (int j = d.lo + 1; j <= d.hi; ++j)
    rho[static_cast<std::size_t>(j)] = bm.add({Role::conn_rho, j, 0}, "EC.rho" + idx(j, 0, 1), VarKind::continuous, 0, 1);

  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    mdl.add_constraint("connect", "connect" + idx(j),
                       Expr().add(r[u]).sub(ec.pass_of(j, 0)).sub(rho[u]).terms, Sense::le, 0);
  }
  for (int j = d.lo + 1; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int k = 0; k < 2; ++k) {
      Expr e;
      e.add(rho[u]).append(ec.horiz(j - 1, k), -1);
      mdl.add_constraint("previous_aisle", "previous_aisle" + idx(j, k), e.terms, Sense::le, 0);
    }
    mdl.add_constraint("previous_aisle", "previous_aisle" + idx(j) + "r",
                       Expr().add(rho[u]).sub(r[u - 1]).terms, Sense::le, 0);
  }
  for (int j = d.lo + 1; j < d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int k = 0; k < 2; ++k) {
      const int kk = 1 - k;
      Expr via_r = Expr().add(r[u]);
      via_r.append(ec.horiz(j, k));
      add_continuation(ec, j, via_r, ec.horiz(j - 1, k), "next_aisle" + idx(j, k));
      Expr any_right = ec.horiz(j, kk);
      any_right.append(ec.horiz(j, k));
      add_continuation(ec, j, any_right, ec.horiz(j - 1, k), "next_aisle_edge" + idx(j, k));
    }
  }
  for (int j = d.lo + 1; j <= d.hi; ++j)
    add_closing(ec, j, 0, 1, r[static_cast<std::size_t>(j)], "last_aisle" + idx(j));
  ec.connectivity_added = true;
  mdl.seal();
  return std::move(ec.bm);
}

inline BuiltModel add_two_block_connectivity(EcCore ec) {
  using namespace detail;
  if (ec.K != 3) throw UnsupportedLayout("two-block connectivity needs three cross-aisles");
  auto& bm = ec.bm;
  auto& mdl = bm.model;
  const auto& d = bm.data;
  const auto m = static_cast<std::size_t>(d.layout.num_aisles);
  // pairs: 0 = (0,1), 1 = (1,2), 2 = (0,2)
  constexpr int pair_a[3] = {0, 1, 0};
  constexpr int pair_b[3] = {1, 2, 2};
  auto pair_of = [](int k, int kk) {
    if (k > kk) std::swap(k, kk);
    return k == 0 ? (kk == 1 ? 0 : 2) : 1;
  };
  std::vector<std::array<int, 3>> r(m, {-1, -1, -1}), rho(m, {-1, -1, -1});
  for (int j = d.lo; j <= d.hi; ++j)
    for (int P = 0; P < 3; ++P)
      r[static_cast<std::size_t>(j)][static_cast<std::size_t>(P)] =
          bm.add({Role::conn_r, j, P}, "EC.r" + idx(j, pair_a[P], pair_b[P]), VarKind::continuous, 0, 1);
  for (int j = d.lo + 1; j <= d.hi; ++j)
    for (int P = 0; P < 3; ++P)
      rho[static_cast<std::size_t>(j)][static_cast<std::size_t>(P)] =
          bm.add({Role::conn_rho, j, P}, "EC.rho" + idx(j, pair_a[P], pair_b[P]), VarKind::continuous, 0, 1);

  for (int j = d.lo; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    const int lower = ec.pass_of(j, 0);
    const int upper = ec.pass_of(j, 1);
    const auto& R = r[u];
    const auto& H = rho[u];
    auto le = [&](const std::string& name, int lhs, std::initializer_list<int> rhs) {
      Expr e;
      e.add(lhs);
      for (int v : rhs) e.sub(v);
      mdl.add_constraint("connect", name, e.terms, Sense::le, 0);
    };
    // adjacent pairs
    le("connect" + idx(j, 0, 1) + "a", R[0], {lower, H[0], upper});
    le("connect" + idx(j, 0, 1) + "b", R[0], {lower, H[0], H[2]});
    le("connect" + idx(j, 1, 2) + "a", R[1], {upper, H[1], lower});
    le("connect" + idx(j, 1, 2) + "b", R[1], {upper, H[1], H[2]});
    // boundary pair through the middle cross or the previous aisle
    le("connect" + idx(j, 0, 2) + "a", R[2], {R[1], H[2]});
    le("connect" + idx(j, 0, 2) + "b", R[2], {R[0], H[2]});
  }
  for (int j = d.lo + 1; j <= d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int P = 0; P < 3; ++P) {
      const int h = rho[u][static_cast<std::size_t>(P)];
      for (int k : {pair_a[P], pair_b[P]}) {
        Expr e;
        e.add(h).append(ec.horiz(j - 1, k), -1);
        mdl.add_constraint("previous_aisle", "previous_aisle" + idx(j, P, k), e.terms, Sense::le, 0);
      }
      mdl.add_constraint("previous_aisle", "previous_aisle" + idx(j, P) + "r",
                         Expr().add(h).sub(r[u - 1][static_cast<std::size_t>(P)]).terms, Sense::le, 0);
    }
  }
  // next-aisle auxiliaries
  std::vector<std::array<std::array<int, 3>, 3>> z(m);
  for (int j = d.lo; j < d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int k = 0; k < 3; ++k)
      for (int kk = 0; kk < 3; ++kk) {
        if (k == kk) {
          z[u][static_cast<std::size_t>(k)][static_cast<std::size_t>(kk)] = -1;
          continue;
        }
        const int zv = bm.add({Role::conn_z, j, k, kk}, "EC.z" + idx(j, k, kk), VarKind::continuous, 0, 1);
        z[u][static_cast<std::size_t>(k)][static_cast<std::size_t>(kk)] = zv;
        mdl.add_constraint("next_aux", "next_aux" + idx(j, k, kk) + "r",
                           Expr().add(zv).sub(r[u][static_cast<std::size_t>(pair_of(k, kk))]).terms, Sense::le, 0);
        Expr e;
        e.add(zv).append(ec.horiz(j, kk), -1);
        mdl.add_constraint("next_aux", "next_aux" + idx(j, k, kk) + "e", e.terms, Sense::le, 0);
      }
  }
  for (int j = d.lo + 1; j < d.hi; ++j) {
    const auto u = static_cast<std::size_t>(j);
    for (int k = 0; k < 3; ++k) {
      Expr lhs = ec.horiz(j, k);
      for (int kk = 0; kk < 3; ++kk)
        if (kk != k) lhs.add(z[u][static_cast<std::size_t>(k)][static_cast<std::size_t>(kk)]);
      add_continuation(ec, j, lhs, ec.horiz(j - 1, k), "next_aisle" + idx(j, k));
    }
  }
  for (int j = d.lo + 1; j <= d.hi; ++j)
    for (int P = 0; P < 3; ++P)
      add_closing(ec, j, pair_a[P], pair_b[P], r[static_cast<std::size_t>(j)][static_cast<std::size_t>(P)],
                  "last_aisle" + idx(j, P));
  ec.connectivity_added = true;
  mdl.seal();
  return std::move(ec.bm);
}

inline BuiltModel build_ec(RoutingData data, const CostModel& cm, const FormulationOptions& opt = {}) {
  auto core = detail::build_ec_core(std::move(data), cm, opt);
  if (core.K == 2) return add_single_block_connectivity(std::move(core));
  return add_two_block_connectivity(std::move(core));
}

inline EcCore build_ec_core(const Instance& inst, const CostModel& cm, const FormulationOptions& opt = {}) {
  return detail::build_ec_core(routing_data(inst), cm, opt);
}

inline BuiltModel build_ec_sprp(const Instance& inst, const CostModel& cm, const FormulationOptions& opt = {}) {
  return build_ec(routing_data(inst), cm, opt);
}
inline BuiltModel build_ec_sprp(const Instance& inst, const FormulationOptions& opt = {}) {
  auto d = routing_data(inst);
  return build_ec(d, cost_model(d), opt);
}

inline BuiltModel build_ec_sprp_ss(const ScatteredInstance& inst, const CostModel& cm,
                                   const FormulationOptions& opt = {}) {
  return build_ec(routing_data(inst), cm, opt);
}
inline BuiltModel build_ec_sprp_ss(const ScatteredInstance& inst, const FormulationOptions& opt = {}) {
  auto d = routing_data(inst);
  return build_ec(d, cost_model(d), opt);
}

}  // namespace sprp
