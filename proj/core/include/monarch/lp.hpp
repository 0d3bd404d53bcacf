#pragma once

#include <string>
#include <vector>

#include "monarch/rational.hpp"

namespace monarch {

/// Feasibility system { x : A x = b, G x >= h } with exact rational
/// coefficients. Variable nonnegativity, when wanted, is expressed as
/// ordinary ">=" rows so certificates stay row-aligned and auditable.
struct LinearProgram {
  struct Row {
    std::vector<Rational> coeff;
    Rational rhs;
    std::string label;
  };

  int num_vars = 0;
  std::vector<Row> eq;  // coeff . x = rhs
  std::vector<Row> ge;  // coeff . x >= rhs

  Row& add_eq(const std::string& label) {
    eq.push_back({std::vector<Rational>(num_vars, Rational(0)), 0, label});
    return eq.back();
  }
  Row& add_ge(const std::string& label) {
    ge.push_back({std::vector<Rational>(num_vars, Rational(0)), 0, label});
    return ge.back();
  }
};

enum class Feasibility { Feasible, Infeasible };

/// Outcome of a feasibility solve, self-certifying either way:
///  - Feasible: `point` satisfies every row exactly.
///  - Infeasible: multipliers with ge_mult >= 0 such that
///      sum ge_mult.G + sum eq_mult.A = 0  (componentwise) and
///      sum ge_mult.h + sum eq_mult.b > 0,
///    an exact Farkas refutation.
struct FeasibilityOutcome {
  Feasibility verdict;
  std::vector<Rational> point;
  std::vector<Rational> eq_mult;
  std::vector<Rational> ge_mult;
};

/// Phase-1 simplex over exact rationals with Bland's rule.
FeasibilityOutcome solve_feasibility(const LinearProgram& lp);

/// Independent certificate checkers; they share no code with the solver
/// beyond the row representation.
bool check_point(const LinearProgram& lp, const std::vector<Rational>& x);
bool check_farkas(const LinearProgram& lp, const std::vector<Rational>& eq_mult,
                  const std::vector<Rational>& ge_mult);
bool check_outcome(const LinearProgram& lp, const FeasibilityOutcome& outcome);

}  // namespace monarch
