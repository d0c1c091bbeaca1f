#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fedlab/rational.hpp"

namespace fedlab {

enum class Relation { le, ge, eq };

struct Term {
  int var;
  Rat coef;
};

struct Constraint {
  std::vector<Term> terms;  // sparse row; absent variables have coefficient 0
  Relation rel;
  Rat rhs;
  std::string label;
};

/// Minimisation LP over variables bounded below (default 0).
class LPModel {
 public:
  explicit LPModel(int num_vars = 0);

  int add_variable(const Rat& lower = 0, std::string label = {});
  int num_vars() const { return static_cast<int>(lower_.size()); }

  void set_objective(int var, const Rat& coef);
  void set_lower_bound(int var, const Rat& lower);
  void add_constraint(std::vector<Term> terms, Relation rel, const Rat& rhs, std::string label = {});
  /// Dense form; coefficient vector must have num_vars entries.
  void add_dense_constraint(const std::vector<Rat>& coefs, Relation rel, const Rat& rhs, std::string label = {});

  const std::vector<Rat>& objective() const { return objective_; }
  const std::vector<Rat>& lower_bounds() const { return lower_; }
  const std::vector<Constraint>& constraints() const { return rows_; }
  const std::string& variable_label(int var) const { return var_labels_[var]; }

  Rat evaluate(const std::vector<Rat>& x) const;
  /// Exact check of every row and lower bound.
  bool satisfied_by(const std::vector<Rat>& x) const;

  /// One line per constraint: "c_1 ... c_k REL rhs".
  std::string dump() const;

 private:
  std::vector<Rat> objective_;
  std::vector<Rat> lower_;
  std::vector<std::string> var_labels_;
  std::vector<Constraint> rows_;
};

enum class LPStatus { optimal, infeasible, unbounded };
const char* to_string(LPStatus s);

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rat value;
  std::vector<Rat> assignment;
  long pivots = 0;
};

/// Exact two-phase primal simplex. Dantzig pricing, switching to Bland's
/// rule after a run of degenerate pivots so cycling cannot occur.
LPSolution solve(const LPModel& model);

/// A model solved once and then tightened by appended rows. Each re-solve
/// starts from the previous optimal basis and runs the dual simplex, which
/// is far cheaper than starting over when only a few cuts are added.
class LPSession {
 public:
  explicit LPSession(LPModel model);
  ~LPSession();
  LPSession(const LPSession&) = delete;
  LPSession& operator=(const LPSession&) = delete;

  /// Rows added after the first solve must be <= or >=.
  void add_constraint(std::vector<Term> terms, Relation rel, const Rat& rhs, std::string label = {});
  LPSolution solve();
  const LPModel& model() const { return model_; }

 private:
  struct Impl;
  LPModel model_;
  std::unique_ptr<Impl> impl_;
  std::size_t loaded_rows_ = 0;
  bool dead_ = false;  // infeasible or unbounded already
  LPSolution last_;
};

}  // namespace fedlab
