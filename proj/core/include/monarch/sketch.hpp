#pragma once

#include <cstdint>
#include <vector>

#include "monarch/csp.hpp"
#include "monarch/rational.hpp"

namespace monarch {

/// Exact lambda-bias vector: entry l = (1/W) sum over constraint positions
/// with j(i)_t = l of lambda_t w_i b(i)_t.
std::vector<Rational> bias_vector(const CspInstance& psi,
                                  const std::vector<Rational>& lambda);

/// ell1 norm of the bias vector (= max over sign vectors a of <a, bias>).
Rational b_norm_exact(const CspInstance& psi,
                      const std::vector<Rational>& lambda);

/// Streaming ell1 estimator via Cauchy stable projections. Holds r = ceil
/// (c/eps'^2) running sums; each coordinate's projection weights are
/// rehashed on demand from (seed, coordinate, repetition), so the state is
/// O(r) regardless of n and m.
///
/// Sums are quantized to fixed point (2^-32 resolution) in 128-bit
/// accumulators; integer addition is associative, so merging shard states
/// is bit-exact against the single-pass state.
class L1Sketch {
 public:
  static constexpr int kDefaultC = 64;

  L1Sketch(uint64_t seed, double eps, int c = kDefaultC);

  /// Adds value * e_coord to the implicit vector (coord is 1-based).
  void add_coordinate(int64_t coord, double value);
  /// Feeds one constraint: position t contributes lambda[t] * w * b_t at
  /// coordinate j_t, and w joins the running weight total.
  void add_constraint(const Constraint& c, const std::vector<double>& lambda);

  /// Requires identical (seed, eps, c).
  void merge(const L1Sketch& other);

  /// Median-of-|projections| estimate of the ell1 norm of the accumulated
  /// vector, divided by the accumulated weight when any was fed.
  double estimate() const;

  uint64_t seed() const { return seed_; }
  int repetitions() const { return r_; }
  size_t state_bytes() const;
  bool state_equals(const L1Sketch& other) const;

 private:
  uint64_t seed_;
  double eps_;
  int c_, r_;
  std::vector<__int128> sums_;
  __int128 weight_q_ = 0;
  uint64_t processed_ = 0;
};

/// One-shot sketch of an instance's bias norm with accuracy eps.
double l1_sketch(const CspInstance& psi, const std::vector<Rational>& lambda,
                 double eps, uint64_t seed, int c = L1Sketch::kDefaultC);

struct SketchVerdict {
  Rational rho, eps0, eps_star;     // predicate data
  Rational eps, eps_prime;          // requested accuracy, eps' = eps/8
  Rational b_tilde;                 // estimate (exact in exact-B mode)
  Rational delta_tilde;             // min{1/3k, 2 b/(9 rho k^2)}
  Rational v;                       // rho + b delta / (1+eps')^2
  bool exact_b = false;
  bool eps_star_zero = false;       // guarantee is vacuous when eps* = 0
};

/// Algorithm 1 with the sketched estimator (B~ clamped at 0).
SketchVerdict algorithm1(const CspInstance& psi, const Rational& eps,
                         uint64_t seed, int c = L1Sketch::kDefaultC);
/// Deterministic debug path: b_norm_exact substituted for the sketch.
SketchVerdict algorithm1_exact(const CspInstance& psi, const Rational& eps);

/// val >= rho + B delta(B) (Lemma-20 shape) and
/// val <= (B + rho k)/(eps0 + rho k) (Lemma-21 shape), exact.
Rational bound_lower(const Rational& b, const BooleanFunction& f);
Rational bound_upper(const Rational& b, const BooleanFunction& f);

/// Internal kernel, exposed for tests: out[i] = tan(pi a[i]) for
/// a in (-1/2, 1/2).
void tanpi_batch(const double* a, double* out, size_t count);

}  // namespace monarch
