#include "monarch/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace monarch {

Integer binomial(long n, long r) {
  if (r < 0 || r > n || n < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

Integer binomial_prefix(long n, long r) {
  Integer sum = 0;
  for (long i = 0; i < r; ++i) sum += binomial(n, i);
  return sum;
}

Integer pow2(unsigned long e) {
  Integer out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), e);
  return out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("bad integer: " + text);
    q.canonicalize();
    return q;
  }
  // decimal: digits '.' digits, parsed exactly as num/10^frac
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const size_t frac = text.size() - dot - 1;
  if (frac == 0) throw std::invalid_argument("bad decimal: " + text);
  bool neg = false;
  std::string body = digits;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  if (body.empty()) throw std::invalid_argument("bad decimal: " + text);
  for (char c : body)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad decimal: " + text);
  Integer num(body, 10);
  if (neg) num = -num;
  Integer den = 1;
  for (size_t i = 0; i < frac; ++i) den *= 10;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int sig_digits) {
  if (q == 0) return "0";
  const bool neg = q < 0;
  Rational a = abs(q);
  // find exponent e with 10^e <= a < 10^{e+1}
  int e = 0;
  Rational ten = 10;
  Rational lo = 1;
  if (a >= 1) {
    while (a >= lo * 10) {
      lo *= 10;
      ++e;
    }
  } else {
    while (a < lo) {
      lo /= 10;
      --e;
    }
  }
  // round a / 10^{e - sig + 1} to nearest integer
  Rational scale = 1;
  int shift = e - sig_digits + 1;
  for (int i = 0; i < shift; ++i) scale *= 10;
  for (int i = 0; i < -shift; ++i) scale /= 10;
  Rational scaled = a / scale;
  Integer mant = (scaled.get_num() * 2 + scaled.get_den()) / (2 * scaled.get_den());
  std::string m = mant.get_str();
  if (static_cast<int>(m.size()) > sig_digits) {
    // rounding carried into an extra digit
    ++e;
    m = m.substr(0, sig_digits);
  }
  // strip trailing zeros in the mantissa
  size_t last = m.find_last_not_of('0');
  m = m.substr(0, last + 1);
  std::ostringstream out;
  if (neg) out << '-';
  if (e >= 0 && e < sig_digits + 3 && e < static_cast<int>(m.size()) + 6) {
    if (static_cast<int>(m.size()) <= e) {
      out << m << std::string(e + 1 - m.size(), '0');
    } else {
      out << m.substr(0, e + 1);
      if (m.size() > static_cast<size_t>(e + 1)) out << '.' << m.substr(e + 1);
    }
  } else if (e < 0 && e > -5) {
    out << "0." << std::string(-e - 1, '0') << m;
  } else {
    out << m.substr(0, 1);
    if (m.size() > 1) out << '.' << m.substr(1);
    out << 'e' << e;
  }
  return out.str();
}

}  // namespace monarch
