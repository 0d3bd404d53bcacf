#include "monarch/lp.hpp"

#include <stdexcept>

namespace monarch {
namespace {

// Dense phase-1 tableau over exact rationals.
//
// Standard form: z = (x+, x-, slack) >= 0 with one artificial per row.
// Rows are sign-flipped so every right-hand side is nonnegative; Bland's
// rule (smallest eligible index) guarantees termination.
class Phase1Tableau {
 public:
  Phase1Tableau(const LinearProgram& lp) : lp_(lp) {
    const int V = lp.num_vars;
    const int E = static_cast<int>(lp.eq.size());
    const int G = static_cast<int>(lp.ge.size());
    rows_ = E + G;
    struct_cols_ = 2 * V + G;
    cols_ = struct_cols_ + rows_ + 1;  // + artificials + rhs
    t_.assign(rows_, std::vector<Rational>(cols_, Rational(0)));
    flip_.assign(rows_, 1);
    basis_.resize(rows_);

    for (int i = 0; i < rows_; ++i) {
      const LinearProgram::Row& row = i < E ? lp.eq[i] : lp.ge[i - E];
      if (static_cast<int>(row.coeff.size()) != V)
        throw std::invalid_argument("LP row width mismatch");
      const int s = row.rhs < 0 ? -1 : 1;
      flip_[i] = s;
      for (int j = 0; j < V; ++j) {
        t_[i][j] = s * row.coeff[j];
        t_[i][V + j] = -t_[i][j];
      }
      if (i >= E) t_[i][2 * V + (i - E)] = -s;  // G x - slack = h
      t_[i][art_col(i)] = 1;
      t_[i][cols_ - 1] = s * row.rhs;
      basis_[i] = art_col(i);
    }
    // objective row for min(sum of artificials): reduced cost of column j
    // is c_j - sum_i t[i][j]; artificials start with reduced cost 0
    obj_.assign(cols_, Rational(0));
    for (int j = 0; j < cols_; ++j) {
      if (j >= struct_cols_ && j < cols_ - 1) continue;
      for (int i = 0; i < rows_; ++i) obj_[j] -= t_[i][j];
    }
  }

  FeasibilityOutcome solve() {
    for (;;) {
      // Bland: smallest structural/slack column with negative reduced cost
      int enter = -1;
      for (int j = 0; j < struct_cols_; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) break;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_ - 1] / t_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0)
        throw std::logic_error("phase-1 objective unbounded below");
      pivot(leave, enter);
    }
    const Rational objective = -obj_[cols_ - 1];
    if (objective > 0) return extract_farkas();
    return extract_point();
  }

 private:
  int art_col(int i) const { return struct_cols_ + i; }

  void pivot(int leave, int enter) {
    const Rational p = t_[leave][enter];
    for (auto& c : t_[leave]) c /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == leave || t_[i][enter] == 0) continue;
      const Rational f = t_[i][enter];
      for (int j = 0; j < cols_; ++j) t_[i][j] -= f * t_[leave][j];
    }
    if (obj_[enter] != 0) {
      const Rational f = obj_[enter];
      for (int j = 0; j < cols_; ++j) obj_[j] -= f * t_[leave][j];
    }
    basis_[leave] = enter;
  }

  FeasibilityOutcome extract_point() const {
    const int V = lp_.num_vars;
    FeasibilityOutcome out;
    out.verdict = Feasibility::Feasible;
    out.point.assign(V, Rational(0));
    for (int i = 0; i < rows_; ++i) {
      const int col = basis_[i];
      if (col < V)
        out.point[col] += t_[i][cols_ - 1];
      else if (col < 2 * V)
        out.point[col - V] -= t_[i][cols_ - 1];
    }
    return out;
  }

  FeasibilityOutcome extract_farkas() const {
    const int E = static_cast<int>(lp_.eq.size());
    FeasibilityOutcome out;
    out.verdict = Feasibility::Infeasible;
    out.eq_mult.resize(E);
    out.ge_mult.resize(rows_ - E);
    for (int i = 0; i < rows_; ++i) {
      // reduced cost of artificial i is 1 - y_i, so the simplex
      // multiplier is y_i = 1 - obj[art_i]; undo the row sign flip
      const Rational y = (1 - obj_[art_col(i)]) * flip_[i];
      if (i < E)
        out.eq_mult[i] = y;
      else
        out.ge_mult[i - E] = y;
    }
    return out;
  }

  const LinearProgram& lp_;
  int rows_, struct_cols_, cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
  std::vector<int> flip_;
};

}  // namespace

FeasibilityOutcome solve_feasibility(const LinearProgram& lp) {
  return Phase1Tableau(lp).solve();
}

bool check_point(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lp.num_vars) return false;
  for (const auto& row : lp.eq) {
    Rational acc = 0;
    for (int j = 0; j < lp.num_vars; ++j) acc += row.coeff[j] * x[j];
    if (acc != row.rhs) return false;
  }
  for (const auto& row : lp.ge) {
    Rational acc = 0;
    for (int j = 0; j < lp.num_vars; ++j) acc += row.coeff[j] * x[j];
    if (acc < row.rhs) return false;
  }
  return true;
}

bool check_farkas(const LinearProgram& lp, const std::vector<Rational>& eq_mult,
                  const std::vector<Rational>& ge_mult) {
  if (eq_mult.size() != lp.eq.size() || ge_mult.size() != lp.ge.size())
    return false;
  for (const auto& m : ge_mult)
    if (m < 0) return false;
  std::vector<Rational> combo(lp.num_vars, Rational(0));
  Rational rhs = 0;
  for (size_t i = 0; i < lp.eq.size(); ++i) {
    for (int j = 0; j < lp.num_vars; ++j)
      combo[j] += eq_mult[i] * lp.eq[i].coeff[j];
    rhs += eq_mult[i] * lp.eq[i].rhs;
  }
  for (size_t i = 0; i < lp.ge.size(); ++i) {
    for (int j = 0; j < lp.num_vars; ++j)
      combo[j] += ge_mult[i] * lp.ge[i].coeff[j];
    rhs += ge_mult[i] * lp.ge[i].rhs;
  }
  for (const auto& c : combo)
    if (c != 0) return false;
  return rhs > 0;
}

bool check_outcome(const LinearProgram& lp, const FeasibilityOutcome& outcome) {
  if (outcome.verdict == Feasibility::Feasible)
    return check_point(lp, outcome.point);
  return check_farkas(lp, outcome.eq_mult, outcome.ge_mult);
}

}  // namespace monarch
