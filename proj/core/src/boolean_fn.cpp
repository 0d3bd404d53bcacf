#include "monarch/boolean_fn.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monarch {
namespace {

// per-word masks selecting table positions where variable i (i < 6) is +1
constexpr uint64_t kVarMask[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull,
};

// Clears denominators: returns (scaled weights, scaled theta) as integers.
std::pair<std::vector<Integer>, Integer> integerize(const LtfSpec& spec) {
  Integer lcm = 1;
  for (const auto& w : spec.weights) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                             w.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), spec.theta.get_den().get_mpz_t());
  std::vector<Integer> ws;
  ws.reserve(spec.weights.size());
  for (const auto& w : spec.weights) {
    Rational scaled = w * lcm;
    ws.push_back(scaled.get_num());
  }
  Rational st = spec.theta * lcm;
  return {std::move(ws), st.get_num()};
}

bool fits_int64(const Integer& z) {
  return z.fits_slong_p() || (mpz_sizeinbase(z.get_mpz_t(), 2) <= 62);
}

}  // namespace

BooleanFunction::BooleanFunction(int arity, bool fill) : arity_(arity) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("arity out of range [1, 24]");
  const size_t nwords = std::max<size_t>(1, table_size() >> 6);
  words_.assign(nwords, fill ? ~uint64_t{0} : 0);
  if (fill && arity_ < 6) words_[0] = (uint64_t{1} << table_size()) - 1;
}

uint64_t BooleanFunction::ones_count() const {
  uint64_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::string BooleanFunction::table_hex() const {
  const uint32_t digits = std::max<uint32_t>(1, table_size() >> 2);
  std::string out(digits, '0');
  for (uint32_t d = 0; d < digits; ++d) {
    // digit d covers bits [4d, 4d+4), least significant digit last
    const uint32_t nib = (words_[d >> 4] >> ((d & 15) * 4)) & 0xf;
    out[digits - 1 - d] = "0123456789abcdef"[nib];
  }
  return out;
}

BooleanFunction BooleanFunction::from_table_hex(int arity,
                                                const std::string& hex) {
  BooleanFunction f(arity);
  const uint32_t digits = std::max<uint32_t>(1, f.table_size() >> 2);
  if (hex.size() != digits)
    throw std::invalid_argument("truth table hex length mismatch");
  for (uint32_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    uint64_t nib;
    if (c >= '0' && c <= '9')
      nib = c - '0';
    else if (c >= 'a' && c <= 'f')
      nib = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      nib = c - 'A' + 10;
    else
      throw std::invalid_argument("bad hex digit in truth table");
    f.words_[d >> 4] |= nib << ((d & 15) * 4);
  }
  if (arity == 1 && (f.words_[0] >> 2))
    throw std::invalid_argument("truth table bits beyond 2^k");
  return f;
}

std::string LtfSpec::str() const {
  std::ostringstream out;
  out << "ltf " << arity() << ' ' << to_string(theta);
  for (const auto& w : weights) out << ' ' << to_string(w);
  return out.str();
}

LtfSpec LtfSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int k;
  if (!(in >> tag >> k) || tag != "ltf" || k < 1)
    throw std::invalid_argument("bad ltf spec: " + text);
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument("ltf spec missing theta");
  LtfSpec spec;
  spec.theta = parse_rational(tok);
  for (int i = 0; i < k; ++i) {
    if (!(in >> tok)) throw std::invalid_argument("ltf spec missing weights");
    spec.weights.push_back(parse_rational(tok));
  }
  return spec;
}

BooleanFunction ltf_to_function(const LtfSpec& spec) {
  const int k = spec.arity();
  if (k < 1 || k > kMaxArity)
    throw std::invalid_argument("ltf arity out of range");
  auto [ws, theta] = integerize(spec);
  BooleanFunction f(k);
  const uint32_t size = f.table_size();

  Integer magnitude = abs(theta);
  for (const auto& w : ws) magnitude += abs(w);
  if (fits_int64(magnitude)) {
    std::vector<int64_t> w64(k);
    for (int i = 0; i < k; ++i) w64[i] = ws[i].get_si();
    int64_t base = theta.get_si();
    for (int i = 0; i < k; ++i) base -= w64[i];
    for (int i = 0; i < k; ++i) w64[i] *= 2;
    for (uint32_t m = 0; m < size; ++m) {
      int64_t z = base;
      uint32_t bits = m;
      while (bits) {
        z += w64[std::countr_zero(bits)];
        bits &= bits - 1;
      }
      if (z > 0) f.set(m, true);
    }
  } else {
    for (uint32_t m = 0; m < size; ++m) {
      Integer z = theta;
      for (int i = 0; i < k; ++i)
        z += ((m >> i) & 1) ? ws[i] : -ws[i];
      if (z > 0) f.set(m, true);
    }
  }
  return f;
}

bool is_balanced_ltf(const LtfSpec& spec) {
  if (spec.theta != 0) return false;
  const int k = spec.arity();
  if (k > kMaxArity) throw std::invalid_argument("ltf arity out of range");
  auto [ws, theta] = integerize(spec);
  Integer magnitude = 0;
  for (const auto& w : ws) magnitude += abs(w);
  if (fits_int64(magnitude)) {
    std::vector<int64_t> w64(k);
    for (int i = 0; i < k; ++i) w64[i] = ws[i].get_si();
    int64_t base = 0;
    for (int i = 0; i < k; ++i) base -= w64[i];
    const uint32_t size = uint32_t{1} << k;
    for (uint32_t m = 0; m < size; ++m) {
      int64_t z = base;
      uint32_t bits = m;
      while (bits) {
        z += 2 * w64[std::countr_zero(bits)];
        bits &= bits - 1;
      }
      if (z == 0) return false;
    }
    return true;
  }
  const uint32_t size = uint32_t{1} << k;
  for (uint32_t m = 0; m < size; ++m) {
    Integer z = 0;
    for (int i = 0; i < k; ++i) z += ((m >> i) & 1) ? ws[i] : -ws[i];
    if (z == 0) return false;
  }
  return true;
}

Rational rho(const BooleanFunction& f) {
  Rational r(Integer(static_cast<unsigned long>(f.ones_count())),
             pow2(f.arity()));
  r.canonicalize();
  return r;
}

namespace {

// ones of f restricted to positions where variable i is +1
uint64_t ones_with_var(const BooleanFunction& f, int i) {
  const auto& words = f.words();
  uint64_t n = 0;
  if (i < 6) {
    uint64_t mask = kVarMask[i];
    if (f.arity() < 6) mask &= (uint64_t{1} << f.table_size()) - 1;
    for (uint64_t w : words) n += std::popcount(w & mask);
  } else {
    const size_t stride = size_t{1} << (i - 6);
    for (size_t w = 0; w < words.size(); ++w)
      if ((w >> (i - 6)) & 1) n += std::popcount(words[w]);
    (void)stride;
  }
  return n;
}

}  // namespace

ChowVector chow_parameters(const BooleanFunction& f) {
  const int k = f.arity();
  const int64_t total = static_cast<int64_t>(f.ones_count());
  ChowVector chow;
  chow.degree0 = Rational(Integer(static_cast<long>(total)), pow2(k));
  chow.degree0.canonicalize();
  chow.degree1.reserve(k);
  for (int i = 0; i < k; ++i) {
    const int64_t with = static_cast<int64_t>(ones_with_var(f, i));
    Rational c(Integer(static_cast<long>(2 * with - total)), pow2(k));
    c.canonicalize();
    chow.degree1.push_back(std::move(c));
  }
  return chow;
}

FourierSpectrum fourier_spectrum(const BooleanFunction& f) {
  const int k = f.arity();
  const uint32_t size = f.table_size();
  std::vector<int64_t> h(size);
  for (uint32_t m = 0; m < size; ++m) h[m] = f.value(m) ? 1 : 0;
  // Walsh-Hadamard butterfly: h[S] = sum_m f(m) (-1)^{|S & m|}
  for (uint32_t len = 1; len < size; len <<= 1)
    for (uint32_t block = 0; block < size; block += len << 1)
      for (uint32_t t = block; t < block + len; ++t) {
        const int64_t a = h[t], b = h[t + len];
        h[t] = a + b;
        h[t + len] = a - b;
      }
  FourierSpectrum spec{k, {}};
  spec.coeff.reserve(size);
  const Integer den = pow2(k);
  for (uint32_t s = 0; s < size; ++s) {
    // bit set in m means x = +1, so flip sign for odd |S|
    const int64_t val = (std::popcount(s) & 1) ? -h[s] : h[s];
    Rational c(Integer(static_cast<long>(val)), den);
    c.canonicalize();
    spec.coeff.push_back(std::move(c));
  }
  return spec;
}

Rational epsilon0(const BooleanFunction& f) {
  if (f.ones_count() == 0)
    throw std::domain_error("epsilon0 undefined for the constant-zero function");
  const int k = f.arity();
  const int64_t total = static_cast<int64_t>(f.ones_count());
  std::vector<int64_t> num(k);  // 2^k * f^({i})
  for (int i = 0; i < k; ++i)
    num[i] = 2 * static_cast<int64_t>(ones_with_var(f, i)) - total;
  int64_t base = 0;
  for (int i = 0; i < k; ++i) base -= num[i];
  bool have = false;
  int64_t best = 0;
  const uint32_t size = f.table_size();
  for (uint32_t m = 0; m < size; ++m) {
    if (!f.value(m)) continue;
    int64_t s = base;
    uint32_t bits = m;
    while (bits) {
      s += 2 * num[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    if (!have || s < best) {
      best = s;
      have = true;
    }
  }
  Rational out(Integer(static_cast<long>(best)), pow2(k));
  out.canonicalize();
  return out;
}

Rational epsilon_star(const BooleanFunction& f) {
  const Rational r = rho(f);
  if (r == 0) throw std::domain_error("epsilon_star undefined when rho(f) = 0");
  const Rational e0 = epsilon0(f);
  const int k = f.arity();
  const Rational a = e0 / (3 * k);
  const Rational b = 2 * e0 * e0 / (9 * r * k * k);
  return std::min(a, b);
}

LtfSpec mon(int k) {
  if (k < 2) throw std::invalid_argument("mon requires k >= 2");
  return wmon(k, k - 2);
}

LtfSpec wmon(int k, int j) {
  if (k < 2) throw std::invalid_argument("wmon requires k >= 2");
  if (j < 0) throw std::invalid_argument("wmon requires j >= 0");
  LtfSpec spec;
  spec.weights.assign(k, Rational(1));
  spec.weights[0] = j;
  return spec;
}

LtfSpec maj(int k) {
  if (k < 2) throw std::invalid_argument("maj requires k >= 2");
  LtfSpec spec;
  spec.weights.assign(k, Rational(1));
  return spec;
}

bool chow_defines_self(const BooleanFunction& f) {
  if (f.ones_count() == 0) return false;
  LtfSpec spec;
  spec.weights = chow_parameters(f).degree1;
  return ltf_to_function(spec) == f;
}

std::pair<Rational, Rational> wmon_chow_closed_form(int k, int j) {
  if (j < 1 || j >= k)
    throw std::invalid_argument("wmon_chow_closed_form requires 1 <= j < k");
  if ((k + j) % 2 != 0)
    throw std::invalid_argument(
        "wmon_chow_closed_form requires k + j even (odd total vote count)");
  const long half = (k - j) / 2;
  Rational president(pow2(k - 1) - 2 * binomial_prefix(k - 1, half), pow2(k));
  president.canonicalize();
  Rational citizen(binomial(k - 2, half - 1), pow2(k - 1));
  citizen.canonicalize();
  return {president, citizen};
}

const char* ltf4_kind_name(Ltf4Kind kind) {
  switch (kind) {
    case Ltf4Kind::Dictator:
      return "Dictator";
    case Ltf4Kind::Mon4:
      return "Mon4";
    case Ltf4Kind::Maj3:
      return "Maj3";
  }
  return "?";
}

BooleanFunction ltf4_kind_function(Ltf4Kind kind) {
  LtfSpec spec;
  switch (kind) {
    case Ltf4Kind::Dictator:
      spec.weights = {1, 0, 0, 0};
      break;
    case Ltf4Kind::Mon4:
      spec.weights = {2, 1, 1, 1};
      break;
    case Ltf4Kind::Maj3:
      spec.weights = {1, 1, 1, 0};
      break;
  }
  return ltf_to_function(spec);
}

Ltf4Classification classify_balanced_ltf4(const LtfSpec& spec) {
  if (spec.arity() > 4)
    throw std::invalid_argument("classify_balanced_ltf4 requires arity <= 4");
  LtfSpec padded = spec;
  padded.weights.resize(4, Rational(0));
  if (!is_balanced_ltf(padded))
    throw std::invalid_argument("not a balanced LTF");

  Ltf4Classification out{};
  std::array<Rational, 4> mag;
  for (int i = 0; i < 4; ++i) {
    out.flipped[i] = padded.weights[i] < 0;
    mag[i] = abs(padded.weights[i]);
  }
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return mag[a] > mag[b]; });
  out.perm = order;
  const Rational& w1 = mag[order[0]];
  const Rational& w2 = mag[order[1]];
  const Rational& w3 = mag[order[2]];
  const Rational& w4 = mag[order[3]];
  if (w1 > w2 + w3 + w4)
    out.kind = Ltf4Kind::Dictator;
  else if (w1 > w2 + w3 - w4)
    out.kind = Ltf4Kind::Mon4;
  else if (w1 < w2 + w3 - w4)
    out.kind = Ltf4Kind::Maj3;
  else
    throw std::logic_error("balancedness excludes boundary weight cases");
  return out;
}

}  // namespace monarch
