#include "fedlab/lp.hpp"

#include <sstream>
#include <stdexcept>

#include "fedlab/error.hpp"

namespace fedlab {

LPModel::LPModel(int num_vars) : objective_(num_vars), lower_(num_vars), var_labels_(num_vars) {}

int LPModel::add_variable(const Rat& lower, std::string label) {
  objective_.emplace_back(0);
  lower_.push_back(lower);
  var_labels_.push_back(std::move(label));
  return num_vars() - 1;
}

void LPModel::set_objective(int var, const Rat& coef) {
  if (var < 0 || var >= num_vars()) throw Error(ErrorCode::dimension_mismatch, "objective variable out of range");
  objective_[var] = coef;
}

void LPModel::set_lower_bound(int var, const Rat& lower) {
  if (var < 0 || var >= num_vars()) throw Error(ErrorCode::dimension_mismatch, "bound variable out of range");
  lower_[var] = lower;
}

void LPModel::add_constraint(std::vector<Term> terms, Relation rel, const Rat& rhs, std::string label) {
  for (const auto& t : terms) {
    if (t.var < 0 || t.var >= num_vars()) throw Error(ErrorCode::dimension_mismatch, "constraint variable out of range");
  }
  rows_.push_back(Constraint{std::move(terms), rel, rhs, std::move(label)});
}

void LPModel::add_dense_constraint(const std::vector<Rat>& coefs, Relation rel, const Rat& rhs, std::string label) {
  if (static_cast<int>(coefs.size()) != num_vars()) {
    throw Error(ErrorCode::dimension_mismatch, "constraint has " + std::to_string(coefs.size()) + " coefficients, model has " +
                                                   std::to_string(num_vars()) + " variables");
  }
  std::vector<Term> terms;
  for (int j = 0; j < num_vars(); ++j)
    if (sgn(coefs[j]) != 0) terms.push_back({j, coefs[j]});
  add_constraint(std::move(terms), rel, rhs, std::move(label));
}

Rat LPModel::evaluate(const std::vector<Rat>& x) const {
  Rat v = 0;
  for (int j = 0; j < num_vars(); ++j)
    if (sgn(objective_[j]) != 0) v += objective_[j] * x[j];
  return v;
}

bool LPModel::satisfied_by(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != num_vars()) return false;
  for (int j = 0; j < num_vars(); ++j)
    if (x[j] < lower_[j]) return false;
  for (const auto& row : rows_) {
    Rat lhs = 0;
    for (const auto& t : row.terms) lhs += t.coef * x[t.var];
    int c = cmp(lhs, row.rhs);
    if ((row.rel == Relation::le && c > 0) || (row.rel == Relation::ge && c < 0) || (row.rel == Relation::eq && c != 0)) {
      return false;
    }
  }
  return true;
}

std::string LPModel::dump() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    std::vector<Rat> dense(num_vars());
    for (const auto& t : row.terms) dense[t.var] += t.coef;
    for (const auto& c : dense) out << to_string(c) << ' ';
    out << (row.rel == Relation::le ? "<=" : row.rel == Relation::ge ? ">=" : "=") << ' ' << to_string(row.rhs) << '\n';
  }
  return out.str();
}

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

namespace {

constexpr int kDegenerateSwitch = 50;

// Dense tableau. Columns: structural variables, then slack, surplus and
// artificial columns in row order, then slacks of rows appended later.
class Tableau {
 public:
  explicit Tableau(const LPModel& model) : nstruct_(model.num_vars()), lower_(model.lower_bounds()) {
    const auto& rows = model.constraints();
    int aux = 0;
    for (const auto& r : rows) aux += r.rel == Relation::ge ? 2 : 1;
    ncols_ = nstruct_ + aux;
    artificial_.assign(ncols_, 0);
    int next = nstruct_;
    for (const auto& r : rows) {
      std::vector<mpq_class> row(ncols_);
      auto [rhs, rel] = load(r, row);
      if (rel == Relation::le) {
        row[next] = 1;
        basis_.push_back(next++);
      } else {
        if (rel == Relation::ge) row[next++] = -1;
        row[next] = 1;
        artificial_[next] = 1;
        basis_.push_back(next++);
      }
      a_.push_back(std::move(row));
      b_.push_back(rhs);
    }
  }

  // Returns false when infeasible.
  bool phase_one(long& pivots) {
    cost_.assign(ncols_, 0);
    obj_ = 0;
    for (int j = 0; j < ncols_; ++j)
      if (artificial_[j]) cost_[j] = 1;
    price_out();
    if (!primal(pivots)) throw std::logic_error("phase one cannot be unbounded");
    if (sgn(obj_) != 0) return false;
    // drive remaining artificials out of the basis
    for (int i = 0; i < static_cast<int>(a_.size()); ++i) {
      if (!artificial_[basis_[i]]) continue;
      int col = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (!artificial_[j] && sgn(a_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col < 0) {
        a_.erase(a_.begin() + i);
        b_.erase(b_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --i;
        continue;
      }
      pivot(i, col);
      ++pivots;
    }
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const LPModel& model, long& pivots) {
    cost_.assign(ncols_, 0);
    obj_ = 0;
    for (int j = 0; j < nstruct_; ++j) cost_[j] = model.objective()[j];
    price_out();
    return primal(pivots);
  }

  // Appends a <= or >= row with its own slack column, written in terms of
  // the current basis. The row may be violated; the dual simplex repairs it.
  void add_row(const Constraint& r) {
    for (auto& row : a_) row.emplace_back(0);
    cost_.emplace_back(0);
    artificial_.push_back(0);
    ++ncols_;
    std::vector<mpq_class> row(ncols_);
    Rat rhs = r.rhs;
    for (const auto& t : r.terms) {
      row[t.var] += t.coef;
      rhs -= t.coef * lower_[t.var];
    }
    if (r.rel == Relation::ge) {
      for (int j = 0; j < nstruct_; ++j) row[j] = -row[j];
      rhs = -rhs;
    }
    row[ncols_ - 1] = 1;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      int c = basis_[i];
      if (sgn(row[c]) == 0) continue;
      factor_ = row[c];
      for (int j = 0; j < ncols_; ++j) {
        if (sgn(a_[i][j]) == 0) continue;
        mpq_mul(tmp_.get_mpq_t(), factor_.get_mpq_t(), a_[i][j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp_.get_mpq_t());
      }
      rhs -= factor_ * b_[i];
    }
    a_.push_back(std::move(row));
    b_.push_back(rhs);
    basis_.push_back(ncols_ - 1);
  }

  // Dual simplex from a dual feasible basis. Returns false when infeasible.
  // Most negative row first; after a run of degenerate pivots the leaving
  // row is the one with the least basic index, which cannot cycle.
  bool dual(long& pivots) {
    int degenerate = 0;
    mpq_class best, ratio;
    while (true) {
      bool bland = degenerate >= kDegenerateSwitch;
      int leave = -1;
      for (int i = 0; i < static_cast<int>(a_.size()); ++i) {
        if (sgn(b_[i]) >= 0) continue;
        if (leave < 0 || (bland ? basis_[i] < basis_[leave] : b_[i] < b_[leave])) leave = i;
      }
      if (leave < 0) return true;
      int enter = -1;
      const auto& row = a_[leave];
      for (int j = 0; j < ncols_; ++j) {
        if (artificial_[j] || sgn(row[j]) >= 0) continue;
        ratio = cost_[j] / -row[j];
        if (enter < 0 || ratio < best) {
          enter = j;
          best = ratio;
        }
      }
      if (enter < 0) return false;
      degenerate = sgn(best) == 0 ? degenerate + 1 : 0;
      pivot(leave, enter);
      ++pivots;
    }
  }

  // Returns false when unbounded.
  bool primal(long& pivots) {
    int degenerate = 0;
    mpq_class best, ratio;
    while (true) {
      bool bland = degenerate >= kDegenerateSwitch;
      int enter = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (!entering_allowed(j) || sgn(cost_[j]) >= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter < 0 || cost_[j] < cost_[enter]) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      for (int i = 0; i < static_cast<int>(a_.size()); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      degenerate = sgn(best) == 0 ? degenerate + 1 : 0;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void ban_artificials() { banned_ = true; }

  std::vector<Rat> structural_values() const {
    std::vector<Rat> x(lower_);
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (basis_[i] < nstruct_) x[basis_[i]] += b_[i];
    return x;
  }

 private:
  std::pair<Rat, Relation> load(const Constraint& r, std::vector<mpq_class>& row) const {
    Rat rhs = r.rhs;
    for (const auto& t : r.terms) {
      row[t.var] += t.coef;
      rhs -= t.coef * lower_[t.var];
    }
    Relation rel = r.rel;
    if (sgn(rhs) < 0) {
      for (int j = 0; j < nstruct_; ++j) row[j] = -row[j];
      rhs = -rhs;
      if (rel == Relation::le) rel = Relation::ge;
      else if (rel == Relation::ge) rel = Relation::le;
    }
    return {rhs, rel};
  }

  // reduced costs d_j = c_j - sum_i c_B(i) a_ij; obj_ holds -z
  void price_out() {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      mpq_class cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j < ncols_; ++j)
        if (sgn(a_[i][j]) != 0) cost_[j] -= cb * a_[i][j];
      obj_ -= cb * b_[i];
    }
  }

  bool entering_allowed(int j) const { return !banned_ || !artificial_[j]; }

  void pivot(int r, int c) {
    auto& prow = a_[r];
    mpq_class inv = 1 / prow[c];
    std::vector<int> nz;
    for (int j = 0; j < ncols_; ++j) {
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    b_[r] *= inv;
    for (int i = 0; i < static_cast<int>(a_.size()); ++i) {
      if (i != r) eliminate(a_[i], b_[i], prow, b_[r], nz, c);
    }
    eliminate(cost_, obj_, prow, b_[r], nz, c);
    basis_[r] = c;
  }

  void eliminate(std::vector<mpq_class>& row, mpq_class& rhs, const std::vector<mpq_class>& prow, const mpq_class& prhs,
                 const std::vector<int>& nz, int c) {
    if (sgn(row[c]) == 0) return;
    factor_ = row[c];
    for (int j : nz) {
      mpq_mul(tmp_.get_mpq_t(), factor_.get_mpq_t(), prow[j].get_mpq_t());
      mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), tmp_.get_mpq_t());
    }
    mpq_mul(tmp_.get_mpq_t(), factor_.get_mpq_t(), prhs.get_mpq_t());
    mpq_sub(rhs.get_mpq_t(), rhs.get_mpq_t(), tmp_.get_mpq_t());
  }

  int nstruct_;
  int ncols_ = 0;
  std::vector<Rat> lower_;
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> b_;
  std::vector<int> basis_;
  std::vector<char> artificial_;
  bool banned_ = false;
  std::vector<mpq_class> cost_;
  mpq_class obj_;
  mpq_class factor_, tmp_;
};

}  // namespace

struct LPSession::Impl {
  explicit Impl(const LPModel& m) : t(m) {}
  Tableau t;
};

LPSession::LPSession(LPModel model) : model_(std::move(model)) {}
LPSession::~LPSession() = default;

void LPSession::add_constraint(std::vector<Term> terms, Relation rel, const Rat& rhs, std::string label) {
  if (impl_ && rel == Relation::eq) {
    add_constraint(terms, Relation::le, rhs, label);
    add_constraint(std::move(terms), Relation::ge, rhs, std::move(label));
    return;
  }
  model_.add_constraint(std::move(terms), rel, rhs, std::move(label));
}

LPSolution LPSession::solve() {
  if (dead_) return last_;
  LPSolution sol;
  if (!impl_) {
    impl_ = std::make_unique<Impl>(model_);
    loaded_rows_ = model_.constraints().size();
    auto& t = impl_->t;
    if (!t.phase_one(sol.pivots)) {
      sol.status = LPStatus::infeasible;
    } else {
      t.ban_artificials();
      if (!t.phase_two(model_, sol.pivots)) sol.status = LPStatus::unbounded;
      else sol.status = LPStatus::optimal;
    }
  } else {
    auto& t = impl_->t;
    const auto& rows = model_.constraints();
    for (; loaded_rows_ < rows.size(); ++loaded_rows_) t.add_row(rows[loaded_rows_]);
    if (!t.dual(sol.pivots)) {
      sol.status = LPStatus::infeasible;
    } else {
      // already optimal in exact arithmetic; the primal pass only confirms it
      if (!t.primal(sol.pivots)) throw std::logic_error("bounded model became unbounded after adding rows");
      sol.status = LPStatus::optimal;
    }
  }
  if (sol.status != LPStatus::optimal) {
    dead_ = true;
    last_ = sol;
    return sol;
  }
  sol.assignment = impl_->t.structural_values();
  sol.value = model_.evaluate(sol.assignment);
  if (!model_.satisfied_by(sol.assignment)) throw std::logic_error("simplex returned an assignment that fails substitution");
  return sol;
}

LPSolution solve(const LPModel& model) {
  LPSession session(model);
  return session.solve();
}

}  // namespace fedlab
