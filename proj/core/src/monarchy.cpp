#include "monarch/monarchy.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace monarch {
namespace {

void require_valid_shape(const ReducedDistribution& d) {
  if (d.k < 2 || static_cast<int>(d.u.size()) != d.k ||
      static_cast<int>(d.v.size()) != d.k)
    throw std::invalid_argument("reduced distribution has wrong shape");
}

}  // namespace

bool ReducedDistribution::mass_is_one() const {
  Rational mass = 0;
  for (const auto& x : u) mass += x;
  for (const auto& x : v) mass += x;
  return mass == 1;
}

bool ReducedDistribution::nonnegative() const {
  for (const auto& x : u)
    if (x < 0) return false;
  for (const auto& x : v)
    if (x < 0) return false;
  return true;
}

ReducedDistribution ReducedDistribution::uniform(int k) {
  ReducedDistribution d;
  d.k = k;
  d.u.resize(k);
  d.v.resize(k);
  const Integer den = pow2(k);
  for (int i = 0; i < k; ++i) {
    Rational mass(binomial(k - 1, i), den);
    mass.canonicalize();
    d.u[i] = mass;
    d.v[i] = mass;
  }
  return d;
}

ReducedDistribution ReducedDistribution::zero(int k) {
  ReducedDistribution d;
  d.k = k;
  d.u.assign(k, Rational(0));
  d.v.assign(k, Rational(0));
  return d;
}

std::string ReducedDistribution::str() const {
  std::ostringstream out;
  out << "rdist " << k << '\n';
  for (int i = 0; i < k; ++i)
    if (u[i] != 0) out << "u " << i << ' ' << to_string(u[i]) << '\n';
  for (int i = 0; i < k; ++i)
    if (v[i] != 0) out << "v " << i << ' ' << to_string(v[i]) << '\n';
  return out.str();
}

ReducedDistribution ReducedDistribution::parse(std::istream& in) {
  std::string tag;
  int k;
  if (!(in >> tag >> k) || tag != "rdist" || k < 2)
    throw std::invalid_argument("bad rdist header");
  ReducedDistribution d = zero(k);
  std::string side, value;
  int i;
  while (in >> side >> i >> value) {
    if (i < 0 || i >= k) throw std::invalid_argument("rdist index out of range");
    if (side == "u")
      d.u[i] = parse_rational(value);
    else if (side == "v")
      d.v[i] = parse_rational(value);
    else
      throw std::invalid_argument("rdist entries must be 'u' or 'v'");
  }
  return d;
}

MarginalPair marginals(const ReducedDistribution& d) {
  require_valid_shape(d);
  MarginalPair m{0, 0};
  for (int i = 0; i < d.k; ++i) {
    m.mu1 += d.u[i] - d.v[i];
    Rational factor(2 * i - (d.k - 1), d.k - 1);
    factor.canonicalize();
    m.mu_prime += factor * (d.u[i] + d.v[i]);
  }
  m.mu_prime.canonicalize();
  return m;
}

Polynomial h_polynomial(const ReducedDistribution& d) {
  require_valid_shape(d);
  const int k = d.k;
  const Polynomial p = Polynomial::x();
  const Polynomial q = Polynomial::constant(1) - p;  // 1 - p
  Polynomial h;
  for (int i = 0; i < k; ++i) {
    if (d.u[i] != 0) {
      Polynomial miss = q.pow(i) * p.pow(k - 1 - i);  // flip to 1(-1)^{k-1}
      Polynomial term = p * (Polynomial::constant(1) - miss) +
                        q.pow(k - i) * p.pow(i);
      h += d.u[i] * term;
    }
    if (d.v[i] != 0) {
      Polynomial miss = q.pow(i) * p.pow(k - 1 - i);
      Polynomial term = q * (Polynomial::constant(1) - miss) +
                        q.pow(k - 1 - i) * p.pow(i + 1);
      h += d.v[i] * term;
    }
  }
  return h;
}

bool in_sn_half(const ReducedDistribution& d) {
  return h_polynomial(d) == Polynomial::constant(Rational(1, 2));
}

bool in_ky1_halfspace(const MarginalPair& m, int k) {
  return m.mu1 * (k - 2) + m.mu_prime * (k - 1) >= 1;
}

Rational condition_ii_value(const ReducedDistribution& d,
                            const Rational& delta) {
  require_valid_shape(d);
  const int k = d.k;
  const Rational a = Rational(1, 2) + delta;  // Pr[flip keeps +1]
  const Rational b = Rational(1, 2) - delta;
  auto apow = [&](int e) {
    Rational r = 1;
    for (int t = 0; t < e; ++t) r *= a;
    return r;
  };
  auto bpow = [&](int e) {
    Rational r = 1;
    for (int t = 0; t < e; ++t) r *= b;
    return r;
  };
  Rational acc = 0;
  for (int i = 0; i < k; ++i) {
    acc += b * d.u[i] + a * d.v[i];
    acc += d.u[i] * (-apow(i) * bpow(k - i) + bpow(i) * apow(k - i));
    acc += d.v[i] * (-apow(i + 1) * bpow(k - 1 - i) + bpow(i + 1) * apow(k - 1 - i));
  }
  return acc;
}

Polynomial condition_ii_polynomial(const ReducedDistribution& d) {
  require_valid_shape(d);
  const int k = d.k;
  const Polynomial a({Rational(1, 2), Rational(1)});   // 1/2 + delta
  const Polynomial b({Rational(1, 2), Rational(-1)});  // 1/2 - delta
  Polynomial acc;
  for (int i = 0; i < k; ++i) {
    if (d.u[i] != 0) {
      acc += d.u[i] * b;
      acc += d.u[i] * (b.pow(i) * a.pow(k - i) - a.pow(i) * b.pow(k - i));
    }
    if (d.v[i] != 0) {
      acc += d.v[i] * a;
      acc +=
          d.v[i] * (b.pow(i + 1) * a.pow(k - 1 - i) - a.pow(i + 1) * b.pow(k - 1 - i));
    }
  }
  return acc;
}

ConditionIii condition_iii_values(const ReducedDistribution& d) {
  require_valid_shape(d);
  ConditionIii out;
  out.p1 = 0;
  Rational weighted = 0;
  for (int i = 0; i < d.k; ++i) {
    out.p1 += d.u[i];
    weighted += i * (d.u[i] + d.v[i]);
  }
  out.p_prime = weighted / (d.k - 1);
  out.holds = out.p_prime >= 1 - Rational(d.k - 2, d.k - 1) * out.p1;
  return out;
}

ReducedDistribution witness(int k) {
  if (k < 5)
    throw std::domain_error(
        "no intersection witness exists for k < 5 (MON_k is approximable)");
  ReducedDistribution d = ReducedDistribution::zero(k);
  if (k == 5) {
    d.u[4] = Rational(1, 3);
    d.v[2] = Rational(1, 3);
    d.v[3] = Rational(1, 6);
    d.v[4] = Rational(1, 6);
    return d;
  }
  if (k % 2 == 0) {
    const Integer t = binomial(k, k / 2) - 2;
    d.u[k / 2] = Rational(t - 2, 2 * t);
    d.u[k / 2].canonicalize();
    for (int i = k / 2; i < k; ++i) {
      d.v[i] = Rational(binomial(k - 1, i) - binomial(k - 1, i + 1), t);
      d.v[i].canonicalize();
    }
  } else {
    const Integer t = 2 * binomial(k - 1, (k - 1) / 2) - 2;
    d.u[(k - 1) / 2] = Rational(t - 2, 4 * t);
    d.u[(k - 1) / 2].canonicalize();
    d.u[(k + 1) / 2] = d.u[(k - 1) / 2];
    for (int i = (k - 1) / 2; i < k; ++i) {
      d.v[i] = Rational(binomial(k - 1, i) - binomial(k - 1, i + 1), t);
      d.v[i].canonicalize();
    }
  }
  return d;
}

WitnessReport verify_witness(const ReducedDistribution& d, int k) {
  if (d.k != k)
    throw std::invalid_argument("distribution arity does not match k");
  require_valid_shape(d);
  WitnessReport report;
  Rational mass = 0;
  for (const auto& x : d.u) mass += x;
  for (const auto& x : d.v) mass += x;
  report.mass = mass;
  report.mass_ok = mass == 1;
  report.nonneg_ok = d.nonnegative();
  report.cond_ii_residual =
      condition_ii_polynomial(d) - Polynomial::constant(Rational(1, 2));
  report.cond_ii_ok = report.cond_ii_residual.is_zero();
  // independent route: the Bernoulli-flip polynomial in p must be the
  // constant 1/2 exactly when the delta-expansion is
  report.cond_ii_agrees_h = in_sn_half(d) == report.cond_ii_ok;
  report.cond_iii = condition_iii_values(d);
  report.cond_iii_ok = report.cond_iii.holds;
  return report;
}

Polynomial comb_identity_residual(int m) {
  if (m < 1) throw std::invalid_argument("comb identity requires m >= 1");
  const Polynomial a({Rational(1, 2), Rational(1)});
  const Polynomial b({Rational(1, 2), Rational(-1)});
  Polynomial lhs;
  for (int i = (m + 1) / 2; i <= m; ++i) {
    const Rational weight(binomial(m, i) - binomial(m, i + 1));
    if (weight == 0) continue;
    lhs += weight * (a.pow(i + 1) * b.pow(m - i) - b.pow(i + 1) * a.pow(m - i));
  }
  return lhs - Polynomial({Rational(0), Rational(2)});
}

LinearProgram build_monarchy_lp(int k) {
  if (k < 2) throw std::invalid_argument("monarchy LP requires k >= 2");
  LinearProgram lp;
  lp.num_vars = 2 * k;

  // h-polynomial coefficient functionals, one column at a time
  std::vector<Polynomial> column_poly(2 * k);
  for (int j = 0; j < 2 * k; ++j) {
    ReducedDistribution unit = ReducedDistribution::zero(k);
    (j < k ? unit.u[j] : unit.v[j - k]) = 1;
    column_poly[j] = h_polynomial(unit);
  }
  for (int r = 0; r <= k; ++r) {
    auto& row = lp.add_eq(r == 0 ? "h.const" : "h.p^" + std::to_string(r));
    for (int j = 0; j < 2 * k; ++j) row.coeff[j] = column_poly[j].coeff(r);
    row.rhs = r == 0 ? Rational(1, 2) : Rational(0);
  }
  {
    auto& row = lp.add_eq("mass");
    for (int j = 0; j < 2 * k; ++j) row.coeff[j] = 1;
    row.rhs = 1;
  }
  {
    // mu1 (k-2) + mu' (k-1) >= 1 expanded through the marginal formulas
    auto& row = lp.add_ge("ky1");
    for (int i = 0; i < k; ++i) {
      row.coeff[i] = (k - 2) + (2 * i - (k - 1));
      row.coeff[k + i] = -(k - 2) + (2 * i - (k - 1));
    }
    row.rhs = 1;
  }
  for (int j = 0; j < 2 * k; ++j) {
    auto& row = lp.add_ge("nonneg." + std::string(j < k ? "u" : "v") +
                          std::to_string(j < k ? j : j - k));
    row.coeff[j] = 1;
  }
  return lp;
}

Rational certificate_implied_bound(const LinearProgram& lp,
                                   const FeasibilityOutcome& outcome, int k) {
  (void)k;
  if (outcome.verdict != Feasibility::Infeasible)
    throw std::invalid_argument("bound extraction needs an infeasibility certificate");
  size_t ky_index = lp.ge.size();
  for (size_t i = 0; i < lp.ge.size(); ++i)
    if (lp.ge[i].label == "ky1") ky_index = i;
  if (ky_index == lp.ge.size()) throw std::invalid_argument("no ky1 row");
  const Rational lambda0 = outcome.ge_mult[ky_index];
  if (lambda0 <= 0)
    throw std::domain_error("certificate does not engage the ky1 halfspace");
  Rational rhs = 0;
  for (size_t i = 0; i < lp.eq.size(); ++i)
    rhs += outcome.eq_mult[i] * lp.eq[i].rhs;
  return -rhs / lambda0;
}

MonarchyDecision decide_monarchy(int k) {
  LinearProgram lp = build_monarchy_lp(k);
  FeasibilityOutcome outcome = solve_feasibility(lp);
  if (!check_outcome(lp, outcome))
    throw std::logic_error("simplex outcome failed independent certification");
  MonarchyDecision decision;
  decision.k = k;
  decision.outcome = outcome;
  if (outcome.verdict == Feasibility::Feasible) {
    decision.verdict = MonarchyVerdict::Resistant;
    decision.witness_dist = ReducedDistribution::zero(k);
    for (int i = 0; i < k; ++i) {
      decision.witness_dist.u[i] = outcome.point[i];
      decision.witness_dist.v[i] = outcome.point[k + i];
    }
  } else {
    decision.verdict = MonarchyVerdict::Approximable;
    decision.implied_bound = certificate_implied_bound(lp, outcome, k);
  }
  return decision;
}

}  // namespace monarch
