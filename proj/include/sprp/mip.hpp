#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "sprp/errors.hpp"

namespace sprp {

// Model uses integer data only so objective values and feasibility checks
// can be exact.
using Coef = std::int64_t;

inline constexpr Coef unbounded = std::numeric_limits<Coef>::max() / 4;

enum class VarKind { binary, integer, continuous };
enum class Sense { le, eq, ge };

struct Variable {
  std::string name;
  VarKind kind = VarKind::binary;
  Coef lb = 0;
  Coef ub = 1;
  Coef obj = 0;
};

struct Term {
  int var;
  Coef coef;
};

struct Constraint {
  std::string family;  // constraint family tag, e.g. "coverage"
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::le;
  Coef rhs = 0;
};

class UnsupportedModel : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ModelCounts {
  int variables = 0;
  int binaries = 0;
  int integers = 0;  // general integers (not binary)
  int continuous = 0;
  int constraints = 0;
  int integer_like() const { return binaries + integers; }
};

class MipModel {
public:
  std::string formulation;
  std::string instance_id;

  int add_variable(std::string name, VarKind kind, Coef lb, Coef ub, Coef obj = 0) {
    guard();
    if (kind == VarKind::binary) {
      lb = std::max<Coef>(lb, 0);
      ub = std::min<Coef>(ub, 1);
    }
    if (lb > ub) throw InternalError("variable " + name + " has empty domain");
    const int id = static_cast<int>(vars_.size());
    if (!by_name_.emplace(name, id).second) throw InternalError("duplicate variable " + name);
    vars_.push_back({std::move(name), kind, lb, ub, obj});
    return id;
  }
  int add_binary(std::string name, Coef obj = 0) {
    return add_variable(std::move(name), VarKind::binary, 0, 1, obj);
  }

  void add_constraint(std::string family, std::string name, std::vector<Term> terms, Sense sense,
                      Coef rhs) {
    guard();
    // merge duplicate references and drop zeros
    std::vector<Term> merged;
    for (const auto& t : terms) {
      if (t.var < 0 || t.var >= static_cast<int>(vars_.size()))
        throw InternalError("constraint " + name + " references an undeclared variable");
      bool found = false;
      for (auto& m : merged)
        if (m.var == t.var) {
          m.coef += t.coef;
          found = true;
        }
      if (!found) merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
    cons_.push_back({std::move(family), std::move(name), std::move(merged), sense, rhs});
  }

  void fix(int var, Coef value) {
    guard();
    auto& v = vars_.at(static_cast<std::size_t>(var));
    if (value < v.lb || value > v.ub) throw InternalError("fixing " + v.name + " outside its domain");
    v.lb = v.ub = value;
  }

  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return cons_; }
  const Variable& variable(int id) const { return vars_.at(static_cast<std::size_t>(id)); }
  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_constraints() const { return static_cast<int>(cons_.size()); }

  std::optional<int> find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  ModelCounts counts() const {
    ModelCounts c;
    c.variables = num_variables();
    c.constraints = num_constraints();
    for (const auto& v : vars_) {
      if (v.kind == VarKind::binary) ++c.binaries;
      else if (v.kind == VarKind::integer) ++c.integers;
      else ++c.continuous;
    }
    return c;
  }

  int count_family(const std::string& family) const {
    int n = 0;
    for (const auto& c : cons_) n += c.family == family;
    return n;
  }

private:
  void guard() const {
    if (sealed_) throw InternalError("model is sealed");
  }

  std::vector<Variable> vars_;
  std::vector<Constraint> cons_;
  std::unordered_map<std::string, int> by_name_;
  bool sealed_ = false;
};

// ---- exact evaluation ----

inline Coef activity(const Constraint& c, const std::vector<Coef>& x) {
  Coef s = 0;
  for (const auto& t : c.terms) s += t.coef * x[static_cast<std::size_t>(t.var)];
  return s;
}

inline bool satisfied(const Constraint& c, Coef act) {
  switch (c.sense) {
    case Sense::le: return act <= c.rhs;
    case Sense::ge: return act >= c.rhs;
    case Sense::eq: return act == c.rhs;
  }
  return false;
}

inline Coef objective_value(const MipModel& m, const std::vector<Coef>& x) {
  Coef s = 0;
  for (int i = 0; i < m.num_variables(); ++i) s += m.variable(i).obj * x[static_cast<std::size_t>(i)];
  return s;
}

// Returns an empty string if x satisfies every bound and constraint exactly,
// otherwise a description of the first violation.
inline std::string check_assignment(const MipModel& m, const std::vector<Coef>& x) {
  if (static_cast<int>(x.size()) != m.num_variables()) return "assignment has wrong length";
  for (int i = 0; i < m.num_variables(); ++i) {
    const auto& v = m.variable(i);
    const Coef xi = x[static_cast<std::size_t>(i)];
    if (xi < v.lb || xi > v.ub)
      return "bound of " + v.name + " violated (value " + std::to_string(xi) + ")";
  }
  for (const auto& c : m.constraints()) {
    const Coef a = activity(c, x);
    if (!satisfied(c, a))
      return "constraint " + c.name + " [" + c.family + "] violated (activity " +
             std::to_string(a) + ", rhs " + std::to_string(c.rhs) + ")";
  }
  return {};
}

// ---- solutions and backends ----

enum class SolveStatus { optimal, infeasible, limit, error };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::limit: return "limit";
    case SolveStatus::error: return "error";
  }
  return "?";
}

struct MipSolution {
  SolveStatus status = SolveStatus::error;
  std::optional<Coef> objective;
  std::vector<double> values;   // raw backend values
  std::vector<Coef> assignment; // values rounded to the nearest integer
  double wall_ms = 0;
  std::string backend;
  double max_fractionality = 0;  // over all variables, integer or not
  std::string check;             // empty when the rounded assignment is exactly feasible
  std::string message;
};

struct SolveLimits {
  double time_limit_s = 60;
  int threads = 1;
};

class Backend {
public:
  virtual ~Backend() = default;
  virtual std::string id() const = 0;
  // Raw solve; `values` must be filled for optimal and limit-with-incumbent.
  virtual MipSolution run(const MipModel& model, const SolveLimits& limits) = 0;
};

// Solves through the backend, then rounds, recomputes the objective exactly
// and re-checks every constraint on the rounded assignment.
inline MipSolution solve(const MipModel& model, Backend& backend, const SolveLimits& limits = {}) {
  if (model.num_variables() == 0) {
    MipSolution s;
    s.backend = backend.id();
    for (const auto& c : model.constraints())
      if (!satisfied(c, 0)) {
        s.status = SolveStatus::infeasible;
        return s;
      }
    s.status = SolveStatus::optimal;
    s.objective = 0;
    return s;
  }
  const auto t0 = std::chrono::steady_clock::now();
  MipSolution s = backend.run(model, limits);
  s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  s.backend = backend.id();
  if (s.values.size() == static_cast<std::size_t>(model.num_variables())) {
    s.assignment.resize(s.values.size());
    s.max_fractionality = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      const double r = std::round(s.values[i]);
      s.max_fractionality = std::max(s.max_fractionality, std::abs(s.values[i] - r));
      s.assignment[i] = static_cast<Coef>(r);
    }
    s.check = check_assignment(model, s.assignment);
    if (s.check.empty()) s.objective = objective_value(model, s.assignment);
  } else if (s.status == SolveStatus::optimal) {
    s.check = "backend reported optimal without an assignment";
  }
  return s;
}

// ---- LP export ----

inline void write_lp(const MipModel& m, std::ostream& out) {
  auto term = [&](Coef c, int v, bool first) {
    if (c < 0) out << " - ";
    else if (!first) out << " + ";
    const Coef a = c < 0 ? -c : c;
    if (a != 1) out << a << ' ';
    out << m.variable(v).name;
  };
  out << "\\ " << m.formulation << " " << m.instance_id << "\n";
  out << "Minimize\n obj:";
  bool first = true;
  for (int i = 0; i < m.num_variables(); ++i)
    if (m.variable(i).obj != 0) {
      term(m.variable(i).obj, i, first);
      first = false;
    }
  if (first) out << " 0";
  out << "\nSubject To\n";
  for (const auto& c : m.constraints()) {
    out << ' ' << c.name << ':';
    bool f = true;
    for (const auto& t : c.terms) {
      term(t.coef, t.var, f);
      f = false;
    }
    if (f) out << " 0";
    out << (c.sense == Sense::le ? " <= " : c.sense == Sense::ge ? " >= " : " = ") << c.rhs << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : m.variables()) {
    if (v.kind == VarKind::binary && v.lb == 0 && v.ub == 1) continue;
    out << ' ' << v.lb << " <= " << v.name << " <= ";
    if (v.ub >= unbounded) out << "+inf";
    else out << v.ub;
    out << '\n';
  }
  out << "Generals\n";
  for (const auto& v : m.variables())
    if (v.kind == VarKind::integer) out << ' ' << v.name << '\n';
  out << "Binaries\n";
  for (const auto& v : m.variables())
    if (v.kind == VarKind::binary) out << ' ' << v.name << '\n';
  out << "End\n";
}

}  // namespace sprp
