#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "monarch/csp.hpp"
#include "monarch/prng.hpp"

using namespace monarch;

namespace {

CspInstance two_dictators() {
  // dictator on x1 asserted both positively and negatively
  CspInstance psi;
  psi.n = 1;
  psi.predicate = ltf_to_function(LtfSpec{{Rational(1)}, 0});
  psi.constraints.push_back({{1}, {1}, 1});
  psi.constraints.push_back({{1}, {-1}, 1});
  return psi;
}

}  // namespace

TEST_CASE("value basics") {
  CspInstance psi;
  psi.n = 4;
  psi.predicate = ltf_to_function(maj(3));
  psi.constraints.push_back({{1, 2, 3}, {1, 1, 1}, 1});
  Assignment sigma(4);
  sigma.set(1, 1);
  sigma.set(2, 1);
  sigma.set(3, -1);
  sigma.set(4, -1);
  CHECK(value(psi, sigma) == 1);  // MAJ3(1,1,-1) = 1
  sigma.set(2, -1);
  CHECK(value(psi, sigma) == 0);

  // signs flip literals before evaluation:
  // sigma = (1,-1,-1,-1), literals (-1*1, -1*-1, 1*-1) = (-1,1,-1) -> unsat
  psi.constraints[0].sign = {-1, -1, 1};
  CHECK(value(psi, sigma) == 0);
  // flipping the third literal too makes the majority positive
  psi.constraints[0].sign = {-1, -1, -1};
  CHECK(value(psi, sigma) == 1);
}

TEST_CASE("value with explicit hand computation") {
  CspInstance psi;
  psi.n = 3;
  psi.predicate = ltf_to_function(maj(3));
  psi.constraints.push_back({{1, 2, 3}, {-1, 1, 1}, Rational(1, 2)});
  psi.constraints.push_back({{3, 1, 2}, {1, 1, 1}, Rational(3, 2)});
  Assignment sigma(3);
  sigma.set(1, -1);
  sigma.set(2, 1);
  sigma.set(3, -1);
  // c1 literals: (+1, +1, -1) -> sat; c2 literals: (-1, -1, +1) -> unsat
  CHECK(value(psi, sigma) == Rational(1, 2) / 2);
  CHECK_THROWS_AS(value(psi, Assignment(2)), std::invalid_argument);
}

TEST_CASE("zero-weight instance is a defined error") {
  CspInstance psi;
  psi.n = 1;
  psi.predicate = ltf_to_function(LtfSpec{{Rational(1)}, 0});
  psi.constraints.push_back({{1}, {1}, 0});
  CHECK_THROWS_AS(value(psi, Assignment(1)), std::domain_error);
  CHECK_THROWS_AS(brute_force_value(psi), std::domain_error);
}

TEST_CASE("brute force on the contradiction instance") {
  const BruteForceResult r = brute_force_value(two_dictators());
  CHECK(r.value == Rational(1, 2));
  CHECK(r.argmax.get(1) == -1);  // mask 0 wins the tie
}

TEST_CASE("brute force fast path agrees with the direct scan") {
  SplitMix64 rng(7);
  const BooleanFunction f = ltf_to_function(maj(3));
  for (int trial = 0; trial < 10; ++trial) {
    CspInstance psi = random_instance(f, 8, 30, rng.next());
    // fractional weights to exercise the denominator-clearing path
    for (size_t i = 0; i < psi.constraints.size(); ++i)
      psi.constraints[i].weight =
          Rational(1 + static_cast<long>(i % 3)) / (1 + static_cast<long>(i % 5));
    const BruteForceResult fast = brute_force_value(psi);
    Rational best = -1;
    uint64_t best_mask = 0;
    for (uint64_t m = 0; m < (uint64_t{1} << 8); ++m) {
      const Rational v = value(psi, Assignment::from_mask(8, m));
      if (v > best) {
        best = v;
        best_mask = m;
      }
    }
    CHECK(fast.value == best);
    CHECK(value(psi, fast.argmax) == best);
    CHECK(fast.argmax.bits[0] == best_mask);
  }
}

TEST_CASE("brute force optimum at least rho") {
  SplitMix64 rng(13);
  for (auto spec : {maj(3), mon(4), mon(5)}) {
    const BooleanFunction f = ltf_to_function(spec);
    const Rational r = rho(f);
    for (int trial = 0; trial < 5; ++trial) {
      const CspInstance psi = random_instance(f, 10, 40, rng.next());
      CHECK(brute_force_value(psi).value >= r);
    }
  }
}

TEST_CASE("planted instances have optimum 1") {
  SplitMix64 rng(17);
  const BooleanFunction f = ltf_to_function(mon(4));
  for (int trial = 0; trial < 5; ++trial) {
    Assignment sigma(9);
    for (int v = 1; v <= 9; ++v) sigma.set(v, rng.next_bool() ? 1 : -1);
    const CspInstance psi = planted_instance(f, 9, 25, rng.next(), sigma);
    CHECK(value(psi, sigma) == 1);
    CHECK(brute_force_value(psi).value == 1);
  }
  CHECK_THROWS_AS(planted_instance(BooleanFunction(3), 5, 2, 1, Assignment(5)),
                  std::invalid_argument);
}

TEST_CASE("generators are deterministic and validated") {
  const BooleanFunction f = ltf_to_function(maj(3));
  const CspInstance a = random_instance(f, 12, 60, 99);
  const CspInstance b = random_instance(f, 12, 60, 99);
  CHECK(a.str() == b.str());
  CHECK(a.str() != random_instance(f, 12, 60, 100).str());
  a.validate();
  for (const auto& c : a.constraints) {
    CHECK(c.index.size() == 3);
    CHECK(c.index[0] != c.index[1]);
    CHECK(c.index[0] != c.index[2]);
    CHECK(c.index[1] != c.index[2]);
  }
  CHECK_THROWS_AS(random_instance(f, 2, 5, 1), std::invalid_argument);
}

TEST_CASE("value is invariant under reorder and weight scaling") {
  SplitMix64 rng(19);
  const BooleanFunction f = ltf_to_function(maj(3));
  CspInstance psi = random_instance(f, 9, 25, 5);
  const Assignment sigma = Assignment::from_mask(9, 0x155);
  const Rational base = value(psi, sigma);

  CspInstance shuffled = psi;
  std::reverse(shuffled.constraints.begin(), shuffled.constraints.end());
  CHECK(value(shuffled, sigma) == base);

  CspInstance scaled = psi;
  for (auto& c : scaled.constraints) c.weight *= Rational(7, 3);
  CHECK(value(scaled, sigma) == base);
}

TEST_CASE("serialization round trips byte-exactly") {
  const BooleanFunction f = ltf_to_function(mon(4));
  CspInstance psi = random_instance(f, 11, 30, 21);
  psi.constraints[3].weight = Rational(5, 3);
  const std::string text = psi.str();
  std::istringstream in(text);
  const CspInstance back = CspInstance::parse(in);
  CHECK(back.str() == text);
  CHECK(back.n == psi.n);
  CHECK(back.predicate == psi.predicate);

  // ltf predicate form also round trips
  CspInstance with_spec = psi;
  with_spec.predicate_spec = mon(4);
  with_spec.has_ltf_spec = true;
  const std::string text2 = with_spec.str();
  std::istringstream in2(text2);
  CHECK(CspInstance::parse(in2).str() == text2);
}

TEST_CASE("parser rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(CspInstance::parse(in), std::invalid_argument);
  };
  reject("nope 3 4 0\ntable 00\n");
  reject("cspf 3 4 1\ntable ff\n1 1 + 1 - 2 +\n");      // repeated variable
  reject("cspf 3 4 1\ntable ff\n1 1 + 2 - 9 +\n");      // index out of range
  reject("cspf 3 4 1\ntable ff\n1 1 + 2 *\n");          // bad sign token
  reject("cspf 2 4 1\nltf 3 0 1 1 1\n1 1 + 2 +\n");     // arity mismatch
}

TEST_CASE("decimal weights parse exactly") {
  std::istringstream in("cspf 1 2 1\nltf 1 0 1\n0.125 2 +\n");
  const CspInstance psi = CspInstance::parse(in);
  CHECK(psi.constraints[0].weight == Rational(1, 8));
}
