#pragma once

#include <chrono>
#include <vector>

#include "sprp/mip.hpp"

namespace sprp {

// Implicit enumeration for tiny models: depth-first search over the integer
// variables with activity-bound propagation and partial-objective pruning.
//
// Continuous variables are allowed only in a monotone pattern: no objective
// coefficient, no equality rows, and every row, written as `<=`, either has
// no continuous variable with a positive coefficient or exactly one. Rows
// with one positive continuous coefficient are upper bounds on that variable;
// the others only get easier as continuous values grow. For fixed integers the
// largest feasible continuous point is then the greatest fixpoint of the upper
// bounds, which decides feasibility.
class EnumerationBackend : public Backend {
public:
  explicit EnumerationBackend(int max_free_integers = 40) : max_free_(max_free_integers) {}

  std::string id() const override { return "enumerate"; }

  MipSolution run(const MipModel& model, const SolveLimits& limits) override {
    setup(model);
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(limits.time_limit_s));
    timed_out_ = false;
    have_best_ = false;
    nodes_ = 0;

    std::vector<Coef> lo(n_), hi(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      lo[i] = model.variable(static_cast<int>(i)).lb;
      hi[i] = model.variable(static_cast<int>(i)).ub;
    }
    MipSolution out;
    if (propagate(lo, hi)) {
      int free_count = 0;
      for (int v : int_vars_) free_count += lo[v] < hi[v];
      if (free_count > max_free_)
        throw BudgetExceeded("enumeration refuses a model with " + std::to_string(free_count) +
                             " free integer variables (limit " + std::to_string(max_free_) +
                             "); use an external backend");
      dfs(lo, hi);
    }
    if (have_best_) {
      out.status = timed_out_ ? SolveStatus::limit : SolveStatus::optimal;
      out.values.assign(best_.begin(), best_.end());
    } else {
      out.status = timed_out_ ? SolveStatus::limit : SolveStatus::infeasible;
    }
    out.message = std::to_string(nodes_) + " nodes";
    return out;
  }

  long long nodes() const { return nodes_; }

private:
  struct Row {
    std::vector<Term> terms;  // normalized to `<=` (or equality)
    Coef rhs;
    bool eq;
  };
  struct UpperRule {
    int var;
    Coef coef;  // positive
    int row;
  };

  void setup(const MipModel& model) {
    model_ = &model;
    n_ = static_cast<std::size_t>(model.num_variables());
    int_vars_.clear();
    cont_.assign(n_, false);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& v = model.variable(static_cast<int>(i));
      if (v.kind == VarKind::continuous) {
        cont_[i] = true;
        if (v.obj != 0)
          throw UnsupportedModel("enumeration: continuous variable " + v.name +
                                 " has an objective coefficient");
        if (v.ub >= unbounded)
          throw UnsupportedModel("enumeration: continuous variable " + v.name + " is unbounded");
      } else {
        if (v.lb <= -unbounded || v.ub >= unbounded)
          throw UnsupportedModel("enumeration: integer variable " + v.name + " is unbounded");
        int_vars_.push_back(static_cast<int>(i));
      }
    }
    rows_.clear();
    rules_.clear();
    requirement_rows_.clear();
    for (const auto& c : model.constraints()) {
      Row r;
      r.eq = c.sense == Sense::eq;
      const Coef sign = c.sense == Sense::ge ? -1 : 1;
      for (const auto& t : c.terms) r.terms.push_back({t.var, sign * t.coef});
      r.rhs = sign * c.rhs;
      const int row_id = static_cast<int>(rows_.size());
      int positives = 0;
      bool has_cont = false;
      for (const auto& t : r.terms)
        if (cont_[static_cast<std::size_t>(t.var)]) {
          has_cont = true;
          if (t.coef > 0) {
            ++positives;
            rules_.push_back({t.var, t.coef, row_id});
          }
        }
      if (has_cont && r.eq)
        throw UnsupportedModel("enumeration: equality row " + c.name + " has continuous terms");
      if (positives > 1)
        throw UnsupportedModel("enumeration: row " + c.name +
                               " bounds several continuous variables from above");
      if (has_cont && positives == 0) requirement_rows_.push_back(row_id);
      rows_.push_back(std::move(r));
    }
  }

  static Coef floor_div(Coef a, Coef b) {
    Coef q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static Coef ceil_div(Coef a, Coef b) { return -floor_div(-a, b); }

  // Tightens integer bounds; continuous variables keep their static bounds.
  bool propagate(std::vector<Coef>& lo, std::vector<Coef>& hi) const {
    bool changed = true;
    int passes = 0;
    while (changed && passes++ < 50) {
      changed = false;
      for (const auto& r : rows_) {
        Coef min_act = 0, max_act = 0;
        for (const auto& t : r.terms) {
          const auto v = static_cast<std::size_t>(t.var);
          if (t.coef > 0) {
            min_act += t.coef * lo[v];
            max_act += t.coef * hi[v];
          } else {
            min_act += t.coef * hi[v];
            max_act += t.coef * lo[v];
          }
        }
        if (min_act > r.rhs) return false;
        if (r.eq && max_act < r.rhs) return false;
        for (const auto& t : r.terms) {
          const auto v = static_cast<std::size_t>(t.var);
          if (cont_[v] || lo[v] == hi[v]) continue;
          // a*x <= rhs - (min_act - a*x_min)
          const Coef own_min = t.coef > 0 ? t.coef * lo[v] : t.coef * hi[v];
          const Coef slack = r.rhs - (min_act - own_min);
          if (t.coef > 0) {
            const Coef nh = floor_div(slack, t.coef);
            if (nh < hi[v]) { hi[v] = nh; changed = true; }
          } else {
            const Coef nl = ceil_div(slack, t.coef);
            if (nl > lo[v]) { lo[v] = nl; changed = true; }
          }
          if (r.eq) {
            const Coef own_max = t.coef > 0 ? t.coef * hi[v] : t.coef * lo[v];
            const Coef need = r.rhs - (max_act - own_max);
            if (t.coef > 0) {
              const Coef nl = ceil_div(need, t.coef);
              if (nl > lo[v]) { lo[v] = nl; changed = true; }
            } else {
              const Coef nh = floor_div(need, t.coef);
              if (nh < hi[v]) { hi[v] = nh; changed = true; }
            }
          }
          if (lo[v] > hi[v]) return false;
        }
      }
    }
    return true;
  }

  // Greatest continuous point for fully fixed integers; false if infeasible.
  bool settle_continuous(std::vector<double>& x) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (cont_[i]) x[i] = static_cast<double>(model_->variable(static_cast<int>(i)).ub);
    bool changed = true;
    std::size_t guard = 0;
    while (changed && guard++ <= n_ * (rules_.size() + 1) + 1) {
      changed = false;
      for (const auto& u : rules_) {
        const auto& r = rows_[static_cast<std::size_t>(u.row)];
        double rest = 0;
        for (const auto& t : r.terms)
          if (t.var != u.var) rest += static_cast<double>(t.coef) * x[static_cast<std::size_t>(t.var)];
        const double bound = (static_cast<double>(r.rhs) - rest) / static_cast<double>(u.coef);
        auto& xv = x[static_cast<std::size_t>(u.var)];
        if (bound < xv - 1e-12) {
          xv = bound;
          changed = true;
        }
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      if (cont_[i] && x[i] < static_cast<double>(model_->variable(static_cast<int>(i)).lb) - 1e-9)
        return false;
    for (int rid : requirement_rows_) {
      const auto& r = rows_[static_cast<std::size_t>(rid)];
      double act = 0;
      for (const auto& t : r.terms) act += static_cast<double>(t.coef) * x[static_cast<std::size_t>(t.var)];
      if (act > static_cast<double>(r.rhs) + 1e-9) return false;
    }
    return true;
  }

  void dfs(std::vector<Coef>& lo, std::vector<Coef>& hi) {
    if (timed_out_) return;
    if ((++nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    Coef bound = 0;
    int branch = -1;
    for (int v : int_vars_) {
      const auto c = model_->variable(v).obj;
      bound += c >= 0 ? c * lo[static_cast<std::size_t>(v)] : c * hi[static_cast<std::size_t>(v)];
      if (branch < 0 && lo[static_cast<std::size_t>(v)] < hi[static_cast<std::size_t>(v)]) branch = v;
    }
    if (have_best_ && bound >= best_obj_) return;

    if (branch < 0) {
      std::vector<double> x(n_);
      for (std::size_t i = 0; i < n_; ++i) x[i] = static_cast<double>(lo[i]);
      if (!settle_continuous(x)) return;
      best_obj_ = bound;
      best_ = std::move(x);
      have_best_ = true;
      return;
    }

    const auto b = static_cast<std::size_t>(branch);
    const bool ascending = model_->variable(branch).obj >= 0;
    const Coef first = ascending ? lo[b] : hi[b];
    const Coef last = ascending ? hi[b] : lo[b];
    const Coef step = ascending ? 1 : -1;
    for (Coef val = first;; val += step) {
      auto l2 = lo;
      auto h2 = hi;
      l2[b] = h2[b] = val;
      if (propagate(l2, h2)) dfs(l2, h2);
      if (timed_out_ || val == last) break;
    }
  }

  int max_free_;
  const MipModel* model_ = nullptr;
  std::size_t n_ = 0;
  std::vector<int> int_vars_;
  std::vector<bool> cont_;
  std::vector<Row> rows_;
  std::vector<UpperRule> rules_;
  std::vector<int> requirement_rows_;

  std::chrono::steady_clock::time_point deadline_;
  bool timed_out_ = false;
  bool have_best_ = false;
  Coef best_obj_ = 0;
  std::vector<double> best_;
  long long nodes_ = 0;
};

}  // namespace sprp
