#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "monarch/boolean_fn.hpp"
#include "monarch/rational.hpp"

namespace monarch {

/// One weighted constraint f(b .* sigma|_j) = 1 on k distinct variables.
struct Constraint {
  std::vector<int> index;  // 1-based, pairwise distinct
  std::vector<int> sign;   // entries in {-1,+1}
  Rational weight;         // >= 0
};

/// Assignment sigma in {-1,1}^n; bit set means +1.
struct Assignment {
  int n = 0;
  std::vector<uint64_t> bits;

  explicit Assignment(int n_ = 0) : n(n_), bits((n_ + 63) / 64, 0) {}
  int get(int var) const {  // var is 1-based
    return (bits[(var - 1) >> 6] >> ((var - 1) & 63)) & 1 ? 1 : -1;
  }
  void set(int var, int value) {
    const uint64_t bit = uint64_t{1} << ((var - 1) & 63);
    if (value > 0)
      bits[(var - 1) >> 6] |= bit;
    else
      bits[(var - 1) >> 6] &= ~bit;
  }
  static Assignment from_mask(int n, uint64_t mask);
};

struct CspInstance {
  int n = 0;
  BooleanFunction predicate{2};
  /// When built from an LTF the spec is kept so serialization round-trips
  /// byte-exactly; empty weights means "table form".
  LtfSpec predicate_spec;
  bool has_ltf_spec = false;
  std::vector<Constraint> constraints;  // stored in stream order

  Rational total_weight() const;

  /// Text form, line 1 "cspf k n m", line 2 the predicate, then one
  /// constraint per line "w j1 s1 ... jk sk" with s in {+,-}.
  std::string str() const;
  static CspInstance parse(std::istream& in);

  /// Checks arity match, index ranges, distinctness, sign values and
  /// nonnegative weights; throws std::invalid_argument on violation.
  void validate() const;
};

/// Satisfied-weight fraction (1/W) sum w_i f(b .* sigma|_j), exact.
/// Throws std::domain_error when the total weight is zero.
Rational value(const CspInstance& psi, const Assignment& sigma);

struct BruteForceResult {
  Rational value;
  Assignment argmax;
};

/// Exact maximum over all 2^n assignments; the lowest bit pattern wins
/// ties. Requires n <= 26. Early-exits when the running max hits 1.
BruteForceResult brute_force_value(const CspInstance& psi);

/// Seeded generators (SplitMix64 stream, deterministic across platforms).
/// Indices drawn uniformly without replacement, signs uniformly.
CspInstance random_instance(const BooleanFunction& f, int n, int m,
                            uint64_t seed);
/// Rejection-samples each constraint until sigma* satisfies it, so the
/// planted optimum is exactly 1. Throws for a constant-zero predicate.
CspInstance planted_instance(const BooleanFunction& f, int n, int m,
                             uint64_t seed, const Assignment& sigma_star);

}  // namespace monarch
