#pragma once

#include <cstddef>
#include <vector>

#include "monarch/rational.hpp"

namespace monarch {

/// Univariate polynomial with exact rational coefficients, dense form.
/// coeff(i) is the coefficient of x^i; trailing zeros are trimmed so that
/// two equal polynomials compare equal structurally.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static Polynomial constant(const Rational& a) {
    return Polynomial(std::vector<Rational>{a});
  }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is reported as -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(size_t i) const {
    return i < c_.size() ? c_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& a);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  Polynomial pow(unsigned e) const;
  std::string str() const;  // "a0 + a1 x + ..."

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace monarch
