#pragma once

#include <Highs.h>

#include "sprp/mip.hpp"

namespace sprp {

// External MIP backend on HiGHS. Gaps are set to zero so `optimal` means
// optimality was proved.
class HighsBackend : public Backend {
public:
  std::string id() const override { return "highs"; }

  MipSolution run(const MipModel& model, const SolveLimits& limits) override {
    HighsLp lp;
    const auto n = static_cast<HighsInt>(model.num_variables());
    const auto m = static_cast<HighsInt>(model.num_constraints());
    lp.num_col_ = n;
    lp.num_row_ = m;
    lp.sense_ = ObjSense::kMinimize;
    lp.col_cost_.resize(static_cast<std::size_t>(n));
    lp.col_lower_.resize(static_cast<std::size_t>(n));
    lp.col_upper_.resize(static_cast<std::size_t>(n));
    lp.integrality_.resize(static_cast<std::size_t>(n));
    for (HighsInt i = 0; i < n; ++i) {
      const auto& v = model.variable(static_cast<int>(i));
      const auto k = static_cast<std::size_t>(i);
      lp.col_cost_[k] = static_cast<double>(v.obj);
      lp.col_lower_[k] = v.lb <= -unbounded ? -kHighsInf : static_cast<double>(v.lb);
      lp.col_upper_[k] = v.ub >= unbounded ? kHighsInf : static_cast<double>(v.ub);
      lp.integrality_[k] =
          v.kind == VarKind::continuous ? HighsVarType::kContinuous : HighsVarType::kInteger;
    }
    lp.row_lower_.resize(static_cast<std::size_t>(m));
    lp.row_upper_.resize(static_cast<std::size_t>(m));
    auto& a = lp.a_matrix_;
    a.format_ = MatrixFormat::kRowwise;
    a.num_col_ = n;
    a.num_row_ = m;
    a.start_.assign(1, 0);
    for (HighsInt r = 0; r < m; ++r) {
      const auto& c = model.constraints()[static_cast<std::size_t>(r)];
      const double rhs = static_cast<double>(c.rhs);
      lp.row_lower_[static_cast<std::size_t>(r)] = c.sense == Sense::le ? -kHighsInf : rhs;
      lp.row_upper_[static_cast<std::size_t>(r)] = c.sense == Sense::ge ? kHighsInf : rhs;
      for (const auto& t : c.terms) {
        a.index_.push_back(static_cast<HighsInt>(t.var));
        a.value_.push_back(static_cast<double>(t.coef));
      }
      a.start_.push_back(static_cast<HighsInt>(a.index_.size()));
    }

    Highs highs;
    highs.setOptionValue("output_flag", false);
    highs.setOptionValue("mip_rel_gap", 0.0);
    highs.setOptionValue("mip_abs_gap", 0.0);
    highs.setOptionValue("time_limit", limits.time_limit_s);
    highs.setOptionValue("threads", static_cast<HighsInt>(limits.threads));
    highs.setOptionValue("random_seed", static_cast<HighsInt>(0));

    MipSolution out;
    if (highs.passModel(std::move(lp)) == HighsStatus::kError) {
      out.status = SolveStatus::error;
      out.message = "passModel failed";
      return out;
    }
    const HighsStatus rs = highs.run();
    const auto ms = highs.getModelStatus();
    out.message = highs.modelStatusToString(ms);
    if (rs == HighsStatus::kError) {
      out.status = SolveStatus::error;
      return out;
    }
    switch (ms) {
      case HighsModelStatus::kOptimal: out.status = SolveStatus::optimal; break;
      case HighsModelStatus::kInfeasible: out.status = SolveStatus::infeasible; break;
      case HighsModelStatus::kTimeLimit:
      case HighsModelStatus::kIterationLimit:
      case HighsModelStatus::kSolutionLimit:
      case HighsModelStatus::kInterrupt: out.status = SolveStatus::limit; break;
      default: out.status = SolveStatus::error; break;
    }
    const auto& sol = highs.getSolution();
    if (sol.value_valid && (out.status == SolveStatus::optimal || out.status == SolveStatus::limit))
      out.values = sol.col_value;
    return out;
  }
};

}  // namespace sprp
