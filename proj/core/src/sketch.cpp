#include "monarch/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monarch/prng.hpp"

namespace monarch {
namespace {

constexpr double kScale = 4294967296.0;  // 2^32 fixed-point resolution

__int128 quantize(double v) {
  return static_cast<__int128>(std::nearbyint(v * kScale));
}

double median_abs(const std::vector<__int128>& sums) {
  std::vector<double> mag(sums.size());
  for (size_t i = 0; i < sums.size(); ++i) {
    const __int128 s = sums[i];
    mag[i] = static_cast<double>(s < 0 ? -s : s);
  }
  const size_t mid = mag.size() / 2;
  std::nth_element(mag.begin(), mag.begin() + mid, mag.end());
  if (mag.size() % 2 == 1) return mag[mid];
  const double hi = mag[mid];
  std::nth_element(mag.begin(), mag.begin() + mid - 1, mag.begin() + mid);
  return 0.5 * (mag[mid - 1] + hi);
}

}  // namespace

std::vector<Rational> bias_vector(const CspInstance& psi,
                                  const std::vector<Rational>& lambda) {
  if (lambda.size() != static_cast<size_t>(psi.predicate.arity()))
    throw std::invalid_argument("lambda length must equal predicate arity");
  const Rational w_total = psi.total_weight();
  if (w_total == 0) throw std::domain_error("instance has zero total weight");
  std::vector<Rational> bias(psi.n, Rational(0));
  for (const auto& c : psi.constraints)
    for (size_t t = 0; t < c.index.size(); ++t)
      bias[c.index[t] - 1] += lambda[t] * c.weight * c.sign[t];
  for (auto& x : bias) x /= w_total;
  return bias;
}

Rational b_norm_exact(const CspInstance& psi,
                      const std::vector<Rational>& lambda) {
  Rational norm = 0;
  for (const auto& x : bias_vector(psi, lambda)) norm += abs(x);
  return norm;
}

void tanpi_batch(const double* a, double* out, size_t count) {
  // tan(pi a) on (-1/2, 1/2): reduce to [0, 1/4] by oddness and the
  // cotangent reflection tan(pi x) = 1/tan(pi(1/2 - x)), then a degree-25
  // odd Taylor polynomial of tan (error < 2e-8 at pi/4, far below the
  // estimator's statistical noise)
  for (size_t i = 0; i < count; ++i) {
    const double x = std::fabs(a[i]);
    const double t = 0.25 - std::fabs(x - 0.25);
    const double z = 3.141592653589793238 * t;
    const double z2 = z * z;
    double poly = 58870668456604.0 / 3698160658676859375.0;
    poly = poly * z2 + 113927491862.0 / 2900518163668125.0;
    poly = poly * z2 + 18888466084.0 / 194896477400625.0;
    poly = poly * z2 + 443861162.0 / 1856156927625.0;
    poly = poly * z2 + 6404582.0 / 10854718875.0;
    poly = poly * z2 + 929569.0 / 638512875.0;
    poly = poly * z2 + 21844.0 / 6081075.0;
    poly = poly * z2 + 1382.0 / 155925.0;
    poly = poly * z2 + 62.0 / 2835.0;
    poly = poly * z2 + 17.0 / 315.0;
    poly = poly * z2 + 2.0 / 15.0;
    poly = poly * z2 + 1.0 / 3.0;
    poly = poly * z2 + 1.0;
    const double p = z * poly;
    out[i] = std::copysign(x > 0.25 ? 1.0 / p : p, a[i]);
  }
}

L1Sketch::L1Sketch(uint64_t seed, double eps, int c) : seed_(seed), eps_(eps), c_(c) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must be in (0,1)");
  if (c < 1) throw std::invalid_argument("repetition constant must be >= 1");
  r_ = static_cast<int>(std::ceil(c / (eps * eps)));
  sums_.assign(r_, 0);
}

void L1Sketch::add_coordinate(int64_t coord, double value) {
  if (value == 0) return;
  static thread_local std::vector<double> u, cauchy;
  u.resize(r_);
  cauchy.resize(r_);
  for (int rep = 0; rep < r_; ++rep)
    u[rep] = keyed_unit(seed_, static_cast<uint64_t>(coord), rep) - 0.5;
  tanpi_batch(u.data(), cauchy.data(), r_);
  for (int rep = 0; rep < r_; ++rep) sums_[rep] += quantize(value * cauchy[rep]);
}

void L1Sketch::add_constraint(const Constraint& c,
                              const std::vector<double>& lambda) {
  if (lambda.size() != c.index.size())
    throw std::invalid_argument("lambda length must equal constraint arity");
  const double w = c.weight.get_d();
  for (size_t t = 0; t < c.index.size(); ++t)
    add_coordinate(c.index[t], lambda[t] * w * c.sign[t]);
  weight_q_ += quantize(w);
  ++processed_;
}

void L1Sketch::merge(const L1Sketch& other) {
  if (other.seed_ != seed_ || other.eps_ != eps_ || other.c_ != c_)
    throw std::invalid_argument("merging sketches with different configs");
  for (int rep = 0; rep < r_; ++rep) sums_[rep] += other.sums_[rep];
  weight_q_ += other.weight_q_;
  processed_ += other.processed_;
}

double L1Sketch::estimate() const {
  const double med = median_abs(sums_);
  if (weight_q_ > 0) return med / static_cast<double>(weight_q_);
  return med / kScale;
}

size_t L1Sketch::state_bytes() const {
  return sizeof(*this) + sums_.capacity() * sizeof(__int128);
}

bool L1Sketch::state_equals(const L1Sketch& other) const {
  return seed_ == other.seed_ && eps_ == other.eps_ && c_ == other.c_ &&
         sums_ == other.sums_ && weight_q_ == other.weight_q_ &&
         processed_ == other.processed_;
}

double l1_sketch(const CspInstance& psi, const std::vector<Rational>& lambda,
                 double eps, uint64_t seed, int c) {
  std::vector<double> lam(lambda.size());
  for (size_t t = 0; t < lambda.size(); ++t) lam[t] = lambda[t].get_d();
  L1Sketch sk(seed, eps, c);
  for (const auto& con : psi.constraints) sk.add_constraint(con, lam);
  return sk.estimate();
}

namespace {

SketchVerdict finish_verdict(const BooleanFunction& f, const Rational& eps,
                             const Rational& b_tilde, bool exact_b) {
  const int k = f.arity();
  SketchVerdict out;
  out.rho = rho(f);
  if (out.rho == 0) throw std::domain_error("algorithm 1 needs rho(f) > 0");
  out.eps0 = epsilon0(f);
  out.eps_star = epsilon_star(f);
  out.eps_star_zero = out.eps_star == 0;
  out.eps = eps;
  out.eps_prime = eps / 8;
  out.b_tilde = b_tilde < 0 ? Rational(0) : b_tilde;
  const Rational cap(1, 3 * k);
  const Rational data_term =
      2 * out.b_tilde / (9 * out.rho * k * k);
  out.delta_tilde = data_term < cap ? data_term : cap;
  const Rational denom = (1 + out.eps_prime) * (1 + out.eps_prime);
  out.v = out.rho + out.b_tilde * out.delta_tilde / denom;
  out.exact_b = exact_b;
  return out;
}

}  // namespace

SketchVerdict algorithm1(const CspInstance& psi, const Rational& eps,
                         uint64_t seed, int c) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must be in (0,1)");
  const std::vector<Rational> lambda = chow_parameters(psi.predicate).degree1;
  const double b = l1_sketch(psi, lambda, Rational(eps / 8).get_d(), seed, c);
  return finish_verdict(psi.predicate, eps, Rational(b < 0 ? 0.0 : b), false);
}

SketchVerdict algorithm1_exact(const CspInstance& psi, const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must be in (0,1)");
  const std::vector<Rational> lambda = chow_parameters(psi.predicate).degree1;
  return finish_verdict(psi.predicate, eps, b_norm_exact(psi, lambda), true);
}

Rational bound_lower(const Rational& b, const BooleanFunction& f) {
  if (b < 0) throw std::invalid_argument("B must be nonnegative");
  const int k = f.arity();
  const Rational r = rho(f);
  if (r == 0) throw std::domain_error("bounds need rho(f) > 0");
  const Rational cap(1, 3 * k);
  const Rational data_term = 2 * b / (9 * r * k * k);
  return r + b * (data_term < cap ? data_term : cap);
}

Rational bound_upper(const Rational& b, const BooleanFunction& f) {
  if (b < 0) throw std::invalid_argument("B must be nonnegative");
  const int k = f.arity();
  const Rational r = rho(f);
  if (r == 0) throw std::domain_error("bounds need rho(f) > 0");
  const Rational e0 = epsilon0(f);
  return (b + r * k) / (e0 + r * k);
}

}  // namespace monarch
