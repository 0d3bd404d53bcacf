#pragma once

#include <string>
#include <vector>

#include "monarch/lp.hpp"
#include "monarch/polynomial.hpp"
#include "monarch/rational.hpp"

namespace monarch {

/// Citizen-symmetric distribution on {-1,1}^k: u_i is the mass of points
/// with x_1 = +1 and exactly i of the remaining k-1 coordinates +1, v_i the
/// same with x_1 = -1.
struct ReducedDistribution {
  int k = 0;
  std::vector<Rational> u, v;

  bool mass_is_one() const;
  bool nonnegative() const;

  static ReducedDistribution uniform(int k);
  static ReducedDistribution zero(int k);

  /// Text form: "rdist k" then one "u i p/q" or "v i p/q" line per nonzero
  /// entry.
  std::string str() const;
  static ReducedDistribution parse(std::istream& in);
};

struct MarginalPair {
  Rational mu1;       // first-coordinate marginal
  Rational mu_prime;  // common citizen marginal
};

MarginalPair marginals(const ReducedDistribution& d);

/// Probability that a sample from D, after independent Bern(p) sign flips,
/// satisfies MON_k; expanded into an exact polynomial in p.
Polynomial h_polynomial(const ReducedDistribution& d);

/// Membership in the "no" set at threshold 1/2: for the balanced monarchy
/// predicate h_D(p) <= 1/2 everywhere forces h_D == 1/2 identically.
bool in_sn_half(const ReducedDistribution& d);

/// Halfspace mu1 (k-2) + mu' (k-1) >= 1 characterizing the reduced "yes"
/// marginals.
bool in_ky1_halfspace(const MarginalPair& m, int k);

/// The delta-expression whose constancy at 1/2 certifies membership in the
/// "no" set; evaluated at one delta.
Rational condition_ii_value(const ReducedDistribution& d, const Rational& delta);
/// Same expression expanded as an exact polynomial in delta. Related to
/// h_polynomial by p <-> 1/2 + delta but derived independently as a
/// cross-check.
Polynomial condition_ii_polynomial(const ReducedDistribution& d);

struct ConditionIii {
  Rational p1;       // Pr[x_1 = +1]
  Rational p_prime;  // Pr[x_2 = +1]
  bool holds;        // p' >= 1 - (k-2)/(k-1) p1
};

ConditionIii condition_iii_values(const ReducedDistribution& d);

/// The explicit intersection witness for MON_k, k >= 5. Throws
/// std::domain_error for k < 5 (no witness exists).
ReducedDistribution witness(int k);

struct WitnessReport {
  bool mass_ok = false;
  bool nonneg_ok = false;
  bool cond_ii_ok = false;         // delta-polynomial identically 1/2
  bool cond_ii_agrees_h = false;   // independent h-polynomial route agrees
  bool cond_iii_ok = false;
  Rational mass;
  Polynomial cond_ii_residual;     // delta-expansion minus 1/2
  ConditionIii cond_iii;

  bool all_ok() const {
    return mass_ok && nonneg_ok && cond_ii_ok && cond_ii_agrees_h && cond_iii_ok;
  }
};

WitnessReport verify_witness(const ReducedDistribution& d, int k);

/// LHS(delta) - 2 delta of the telescoping binomial identity; zero
/// polynomial iff the identity holds for the given m.
Polynomial comb_identity_residual(int m);

/// Feasibility program over (u_0..u_{k-1}, v_0..v_{k-1}) whose feasible
/// points are exactly the reduced witnesses of the yes/no intersection.
LinearProgram build_monarchy_lp(int k);

enum class MonarchyVerdict { Approximable, Resistant };

struct MonarchyDecision {
  MonarchyVerdict verdict;
  int k;
  FeasibilityOutcome outcome;
  /// Approximable case: the certificate's implied bound c in
  /// "mu1 (k-2) + mu' (k-1) <= c"; exact, and c < 1.
  Rational implied_bound;
  /// Resistant case: the LP witness as a distribution.
  ReducedDistribution witness_dist;
};

MonarchyDecision decide_monarchy(int k);

/// Extracts the implied bound on the halfspace functional from an
/// infeasibility certificate of build_monarchy_lp(k).
Rational certificate_implied_bound(const LinearProgram& lp,
                                   const FeasibilityOutcome& outcome, int k);

}  // namespace monarch
