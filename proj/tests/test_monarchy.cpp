#include <sstream>

#include "doctest.h"
#include "monarch/monarchy.hpp"
#include "monarch/prng.hpp"

using namespace monarch;

namespace {

ReducedDistribution random_distribution(int k, SplitMix64& rng) {
  ReducedDistribution d = ReducedDistribution::zero(k);
  Rational mass = 0;
  for (int i = 0; i < k; ++i) {
    d.u[i] = static_cast<long>(rng.next_below(8));
    d.v[i] = static_cast<long>(rng.next_below(8));
    mass += d.u[i] + d.v[i];
  }
  if (mass == 0) {
    d.u[0] = 1;
    mass = 1;
  }
  for (int i = 0; i < k; ++i) {
    d.u[i] /= mass;
    d.v[i] /= mass;
  }
  return d;
}

}  // namespace

TEST_CASE("marginals") {
  for (int k : {3, 5, 8}) {
    const MarginalPair m = marginals(ReducedDistribution::uniform(k));
    CHECK(m.mu1 == 0);
    CHECK(m.mu_prime == 0);
  }

  const MarginalPair w5 = marginals(witness(5));
  CHECK(w5.mu1 == Rational(-1, 3));
  CHECK(w5.mu_prime == Rational(7, 12));
  CHECK(3 * w5.mu1 + 4 * w5.mu_prime == Rational(4, 3));
  CHECK(in_ky1_halfspace(w5, 5));

  ReducedDistribution point = ReducedDistribution::zero(6);
  point.u[5] = 1;
  const MarginalPair pm = marginals(point);
  CHECK(pm.mu1 == 1);
  CHECK(pm.mu_prime == 1);
}

TEST_CASE("in_ky1_halfspace") {
  CHECK(in_ky1_halfspace({Rational(1), Rational(1)}, 2));
  CHECK(in_ky1_halfspace({Rational(1), Rational(1)}, 9));
  CHECK(!in_ky1_halfspace({Rational(0), Rational(0)}, 5));
}

TEST_CASE("h_polynomial closed form at k=4") {
  CHECK(h_polynomial(ReducedDistribution::uniform(4)) ==
        Polynomial::constant(Rational(1, 2)));

  ReducedDistribution u0 = ReducedDistribution::zero(4);
  u0.u[0] = 1;
  const Polynomial h = h_polynomial(u0);
  CHECK(h.coeff(0) == 1);
  CHECK(h.coeff(1) == -3);
  CHECK(h.coeff(2) == 6);
  CHECK(h.coeff(3) == -4);

  CHECK(h_polynomial(witness(5)) == Polynomial::constant(Rational(1, 2)));
}

TEST_CASE("h symmetry h(p) + h(1-p) = 1") {
  SplitMix64 rng(71);
  for (int k = 2; k <= 8; ++k)
    for (int trial = 0; trial < 20; ++trial) {
      const ReducedDistribution d = random_distribution(k, rng);
      const Polynomial h = h_polynomial(d);
      // degree <= k, so k+2 sample points decide the identity
      for (long s = 0; s <= k + 1; ++s) {
        const Rational p = Rational(s) / 3;
        CHECK(h.eval(p) + h.eval(1 - p) == 1);
      }
    }
}

TEST_CASE("in_sn_half") {
  CHECK(in_sn_half(ReducedDistribution::uniform(6)));
  CHECK(in_sn_half(witness(5)));
  ReducedDistribution u3 = ReducedDistribution::zero(4);
  u3.u[3] = 1;
  CHECK(!in_sn_half(u3));
}

TEST_CASE("condition (ii) values") {
  CHECK(condition_ii_value(witness(5), Rational(1, 4)) == Rational(1, 2));
  CHECK(condition_ii_value(ReducedDistribution::uniform(7), Rational(0)) ==
        Rational(1, 2));
  CHECK(condition_ii_value(witness(6), Rational(-1, 3)) == Rational(1, 2));
}

TEST_CASE("condition (ii) expansion is h at p = 1/2 - delta") {
  SplitMix64 rng(73);
  for (int k = 2; k <= 7; ++k)
    for (int trial = 0; trial < 10; ++trial) {
      const ReducedDistribution d = random_distribution(k, rng);
      const Polynomial h = h_polynomial(d);
      const Polynomial cii = condition_ii_polynomial(d);
      for (long s = -3; s <= k + 1; ++s) {
        const Rational delta = Rational(s) / 7;
        CHECK(cii.eval(delta) == h.eval(Rational(1, 2) - delta));
        CHECK(condition_ii_value(d, delta) == cii.eval(delta));
      }
    }
}

TEST_CASE("two codepaths agree on membership for random distributions") {
  SplitMix64 rng(79);
  for (int k = 2; k <= 10; ++k)
    for (int trial = 0; trial < 1000; ++trial) {
      const ReducedDistribution d = random_distribution(k, rng);
      const bool via_h = in_sn_half(d);
      const bool via_delta =
          condition_ii_polynomial(d) == Polynomial::constant(Rational(1, 2));
      CHECK(via_h == via_delta);
    }
}

TEST_CASE("condition (iii) values") {
  const ConditionIii w5 = condition_iii_values(witness(5));
  CHECK(w5.p1 == Rational(1, 3));
  CHECK(w5.p_prime == Rational(19, 24));
  CHECK(w5.holds);

  ReducedDistribution point = ReducedDistribution::zero(6);
  point.u[5] = 1;
  const ConditionIii pm = condition_iii_values(point);
  CHECK(pm.p1 == 1);
  CHECK(pm.p_prime == 1);
  CHECK(pm.holds);

  const ConditionIii uni = condition_iii_values(ReducedDistribution::uniform(5));
  CHECK(uni.p1 == Rational(1, 2));
  CHECK(uni.p_prime == Rational(1, 2));
  CHECK(!uni.holds);  // 1/2 < 1 - (3/4)(1/2) = 5/8
}

TEST_CASE("witness instantiations") {
  const ReducedDistribution w5 = witness(5);
  CHECK(w5.u == std::vector<Rational>{0, 0, 0, 0, Rational(1, 3)});
  CHECK(w5.v == std::vector<Rational>{0, 0, Rational(1, 3), Rational(1, 6),
                                      Rational(1, 6)});

  const ReducedDistribution w6 = witness(6);  // T = C(6,3) - 2 = 18
  CHECK(w6.u[3] == Rational(4, 9));
  CHECK(w6.v[3] == Rational(5, 18));
  CHECK(w6.v[4] == Rational(2, 9));
  CHECK(w6.v[5] == Rational(1, 18));
  CHECK(w6.mass_is_one());

  const ReducedDistribution w7 = witness(7);  // T = 2 C(6,3) - 2 = 38
  CHECK(w7.u[3] == Rational(9, 38));
  CHECK(w7.u[4] == Rational(9, 38));
  CHECK(w7.v[3] == Rational(5, 38));
  CHECK(w7.v[4] == Rational(9, 38));
  CHECK(w7.v[5] == Rational(5, 38));
  CHECK(w7.v[6] == Rational(1, 38));
  CHECK(w7.mass_is_one());

  CHECK_THROWS_AS(witness(4), std::domain_error);
  CHECK_THROWS_AS(witness(2), std::domain_error);
}

TEST_CASE("verify_witness") {
  for (int k = 5; k <= 12; ++k) {
    const WitnessReport rep = verify_witness(witness(k), k);
    CHECK(rep.all_ok());
    CHECK(rep.cond_ii_residual.is_zero());
  }

  const WitnessReport uni = verify_witness(ReducedDistribution::uniform(5), 5);
  CHECK(uni.mass_ok);
  CHECK(uni.nonneg_ok);
  CHECK(uni.cond_ii_ok);
  CHECK(uni.cond_ii_agrees_h);
  CHECK(!uni.cond_iii_ok);

  const WitnessReport zero = verify_witness(ReducedDistribution::zero(5), 5);
  CHECK(!zero.mass_ok);
}

TEST_CASE("comb identity residual") {
  for (int m : {1, 2, 3, 7, 15, 30}) CHECK(comb_identity_residual(m).is_zero());
}

TEST_CASE("monarchy LP rows at k=4 match the hand expansion") {
  const LinearProgram lp = build_monarchy_lp(4);
  REQUIRE(lp.num_vars == 8);
  // variable order u0..u3, v0..v3
  auto row = [&](const std::string& label) -> const LinearProgram::Row& {
    for (const auto& r : lp.eq)
      if (r.label == label) return r;
    for (const auto& r : lp.ge)
      if (r.label == label) return r;
    REQUIRE(false);
    return lp.eq[0];
  };
  CHECK(row("h.const").coeff ==
        std::vector<Rational>{1, 0, 0, 0, 1, 1, 1, 0});
  CHECK(row("h.const").rhs == Rational(1, 2));
  CHECK(row("h.p^1").coeff ==
        std::vector<Rational>{-3, 2, 1, 0, 0, -1, -2, 3});
  CHECK(row("h.p^1").rhs == 0);
  CHECK(row("h.p^2").coeff ==
        std::vector<Rational>{6, -3, 0, 3, -3, 0, 3, -6});
  CHECK(row("h.p^3").coeff ==
        std::vector<Rational>{-4, 2, 0, -2, 2, 0, -2, 4});
  // the quartic terms cancel identically
  CHECK(row("h.p^4").coeff == std::vector<Rational>(8, Rational(0)));
  CHECK(row("mass").coeff == std::vector<Rational>(8, Rational(1)));
  CHECK(row("mass").rhs == 1);
  // ky1: u_i gets 2 + (2i - 3), v_i gets -2 + (2i - 3)
  CHECK(row("ky1").coeff ==
        std::vector<Rational>{-1, 1, 3, 5, -5, -3, -1, 1});
  CHECK(row("ky1").rhs == 1);
}

TEST_CASE("the paper's multiplier combination certifies the k=4 bound") {
  // 3 * (hd2 row) - 13/6 * (hd4 row) + 2/3 * (mass row) dominates the
  // functional 2 mu1 + 3 mu' coordinatewise over the nonnegative orthant,
  // forcing 2 mu1 + 3 mu' <= 2/3 < 1
  const LinearProgram lp = build_monarchy_lp(4);
  const auto& hd2 = lp.eq[1];  // h.p^1
  const auto& hd4 = lp.eq[3];  // h.p^3
  const auto& mass = lp.eq[5];
  REQUIRE(hd2.label == "h.p^1");
  REQUIRE(hd4.label == "h.p^3");
  REQUIRE(mass.label == "mass");
  const Rational rhs = 3 * hd2.rhs - Rational(13, 6) * hd4.rhs +
                       Rational(2, 3) * mass.rhs;
  CHECK(rhs == Rational(2, 3));
  const std::vector<Rational> ky{-1, 1, 3, 5, -5, -3, -1, 1};
  const std::vector<Rational> slack_expected{
      Rational(4, 3), Rational(4, 3), Rational(2, 3), 0,
      Rational(4, 3), Rational(2, 3), 0, 0};
  for (int j = 0; j < 8; ++j) {
    const Rational combo = 3 * hd2.coeff[j] - Rational(13, 6) * hd4.coeff[j] +
                           Rational(2, 3) * mass.coeff[j];
    CHECK(combo - ky[j] == slack_expected[j]);
  }
}

TEST_CASE("witness(k) satisfies the full LP for k = 5") {
  const LinearProgram lp = build_monarchy_lp(5);
  const ReducedDistribution w = witness(5);
  std::vector<Rational> x;
  x.insert(x.end(), w.u.begin(), w.u.end());
  x.insert(x.end(), w.v.begin(), w.v.end());
  CHECK(check_point(lp, x));
}

TEST_CASE("uniform distribution satisfies equalities but not ky1") {
  for (int k : {4, 6}) {
    const LinearProgram lp = build_monarchy_lp(k);
    const ReducedDistribution d = ReducedDistribution::uniform(k);
    std::vector<Rational> x;
    x.insert(x.end(), d.u.begin(), d.u.end());
    x.insert(x.end(), d.v.begin(), d.v.end());
    for (const auto& row : lp.eq) {
      Rational acc = 0;
      for (int j = 0; j < lp.num_vars; ++j) acc += row.coeff[j] * x[j];
      CHECK(acc == row.rhs);
    }
    CHECK(!check_point(lp, x));  // ky1 fails
  }
}

TEST_CASE("decide_monarchy dichotomy") {
  for (int k : {2, 3, 4}) {
    const MonarchyDecision d = decide_monarchy(k);
    CHECK(d.verdict == MonarchyVerdict::Approximable);
    CHECK(d.implied_bound < 1);
    CHECK(check_outcome(build_monarchy_lp(k), d.outcome));
  }
  for (int k = 5; k <= 9; ++k) {
    const MonarchyDecision d = decide_monarchy(k);
    CHECK(d.verdict == MonarchyVerdict::Resistant);
    CHECK(d.witness_dist.mass_is_one());
    CHECK(d.witness_dist.nonnegative());
    CHECK(in_sn_half(d.witness_dist));
    CHECK(in_ky1_halfspace(marginals(d.witness_dist), k));
  }
}

TEST_CASE("rdist text round trips") {
  for (int k : {5, 6, 7}) {
    const ReducedDistribution d = witness(k);
    std::istringstream in(d.str());
    const ReducedDistribution back = ReducedDistribution::parse(in);
    CHECK(back.k == d.k);
    CHECK(back.u == d.u);
    CHECK(back.v == d.v);
  }
  std::istringstream bad("rdist 3\nw 0 1/2\n");
  CHECK_THROWS_AS(ReducedDistribution::parse(bad), std::invalid_argument);
}
