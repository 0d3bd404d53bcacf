#include "monarch/csp.hpp"

#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "monarch/prng.hpp"

namespace monarch {
namespace {

// Predicate input index for constraint c under assignment mask: bit t is
// sign_t * sigma_{j_t} mapped to {0,1}.
uint32_t local_index(const Constraint& c, const Assignment& sigma) {
  uint32_t m = 0;
  for (size_t t = 0; t < c.index.size(); ++t)
    if (c.sign[t] * sigma.get(c.index[t]) > 0) m |= uint32_t{1} << t;
  return m;
}

// Integer weights w_i * L for L = lcm of denominators, or empty when some
// scaled weight exceeds the int64 budget.
std::vector<int64_t> integer_weights(const CspInstance& psi, int64_t* total) {
  Integer lcm = 1;
  for (const auto& c : psi.constraints)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.weight.get_den_mpz_t());
  std::vector<int64_t> w;
  Integer sum = 0;
  for (const auto& c : psi.constraints) {
    Integer scaled = c.weight.get_num() * (lcm / c.weight.get_den());
    sum += scaled;
    if (!scaled.fits_slong_p()) return {};
    w.push_back(scaled.get_si());
  }
  if (!sum.fits_slong_p() || sum.get_si() > std::numeric_limits<int64_t>::max() / 2)
    return {};
  *total = sum.get_si();
  return w;
}

}  // namespace

Assignment Assignment::from_mask(int n, uint64_t mask) {
  Assignment a(n);
  if (n > 0) a.bits[0] = mask;
  return a;
}

Rational CspInstance::total_weight() const {
  Rational w = 0;
  for (const auto& c : constraints) w += c.weight;
  return w;
}

void CspInstance::validate() const {
  const int k = predicate.arity();
  for (const auto& c : constraints) {
    if (static_cast<int>(c.index.size()) != k ||
        static_cast<int>(c.sign.size()) != k)
      throw std::invalid_argument("constraint arity mismatch");
    if (c.weight < 0) throw std::invalid_argument("negative constraint weight");
    for (int t = 0; t < k; ++t) {
      if (c.index[t] < 1 || c.index[t] > n)
        throw std::invalid_argument("variable index out of range");
      if (c.sign[t] != 1 && c.sign[t] != -1)
        throw std::invalid_argument("literal sign must be +-1");
      for (int s = 0; s < t; ++s)
        if (c.index[s] == c.index[t])
          throw std::invalid_argument("repeated variable in constraint");
    }
  }
}

std::string CspInstance::str() const {
  std::ostringstream out;
  const int k = predicate.arity();
  out << "cspf " << k << ' ' << n << ' ' << constraints.size() << '\n';
  if (has_ltf_spec)
    out << predicate_spec.str() << '\n';
  else
    out << "table " << predicate.table_hex() << '\n';
  for (const auto& c : constraints) {
    out << to_string(c.weight);
    for (int t = 0; t < k; ++t)
      out << ' ' << c.index[t] << ' ' << (c.sign[t] > 0 ? '+' : '-');
    out << '\n';
  }
  return out.str();
}

CspInstance CspInstance::parse(std::istream& in) {
  std::string tag;
  int k, n, m;
  if (!(in >> tag >> k >> n >> m) || tag != "cspf" || k < 1 || n < 0 || m < 0)
    throw std::invalid_argument("bad cspf header");
  CspInstance psi;
  psi.n = n;
  std::string kind;
  if (!(in >> kind)) throw std::invalid_argument("missing predicate line");
  if (kind == "table") {
    std::string hex;
    in >> hex;
    psi.predicate = BooleanFunction::from_table_hex(k, hex);
  } else if (kind == "ltf") {
    std::string rest;
    std::getline(in, rest);
    psi.predicate_spec = LtfSpec::parse("ltf" + rest);
    if (psi.predicate_spec.arity() != k)
      throw std::invalid_argument("ltf arity disagrees with header");
    psi.predicate = ltf_to_function(psi.predicate_spec);
    psi.has_ltf_spec = true;
  } else {
    throw std::invalid_argument("predicate line must be 'table' or 'ltf'");
  }
  psi.constraints.reserve(m);
  for (int i = 0; i < m; ++i) {
    Constraint c;
    std::string w;
    if (!(in >> w)) throw std::invalid_argument("truncated constraint list");
    c.weight = parse_rational(w);
    c.index.resize(k);
    c.sign.resize(k);
    for (int t = 0; t < k; ++t) {
      char s;
      if (!(in >> c.index[t] >> s))
        throw std::invalid_argument("truncated constraint");
      if (s != '+' && s != '-')
        throw std::invalid_argument("literal sign must be + or -");
      c.sign[t] = s == '+' ? 1 : -1;
    }
    psi.constraints.push_back(std::move(c));
  }
  psi.validate();
  return psi;
}

Rational value(const CspInstance& psi, const Assignment& sigma) {
  if (sigma.n != psi.n) throw std::invalid_argument("assignment length mismatch");
  const Rational w_total = psi.total_weight();
  if (w_total == 0) throw std::domain_error("instance has zero total weight");
  Rational sat = 0;
  for (const auto& c : psi.constraints)
    if (psi.predicate.value(local_index(c, sigma))) sat += c.weight;
  return sat / w_total;
}

BruteForceResult brute_force_value(const CspInstance& psi) {
  if (psi.n > 26) throw std::domain_error("brute force capped at n <= 26");
  if (psi.total_weight() == 0)
    throw std::domain_error("instance has zero total weight");
  const int n = psi.n;
  const int k = psi.predicate.arity();
  const uint64_t space = uint64_t{1} << n;

  int64_t w_total = 0;
  std::vector<int64_t> w_int = integer_weights(psi, &w_total);

  if (!w_int.empty() && n <= 20) {
    // scatter each constraint's weight onto its satisfying assignments:
    // fixed bits from the satisfied local pattern, free bits enumerated as
    // submasks of the complement
    std::vector<int64_t> val(space, 0);
    for (size_t ci = 0; ci < psi.constraints.size(); ++ci) {
      const Constraint& c = psi.constraints[ci];
      if (w_int[ci] == 0) continue;
      uint64_t var_mask = 0;
      for (int t = 0; t < k; ++t) var_mask |= uint64_t{1} << (c.index[t] - 1);
      const uint64_t free_mask = (space - 1) ^ var_mask;
      for (uint32_t p = 0; p < (uint32_t{1} << k); ++p) {
        uint32_t f_in = 0;
        uint64_t base = 0;
        for (int t = 0; t < k; ++t) {
          const bool plus = (p >> t) & 1;
          if (plus) base |= uint64_t{1} << (c.index[t] - 1);
          if (plus == (c.sign[t] > 0)) f_in |= uint32_t{1} << t;
        }
        if (!psi.predicate.value(f_in)) continue;
        uint64_t sub = free_mask;
        for (;;) {
          val[base | sub] += w_int[ci];
          if (sub == 0) break;
          sub = (sub - 1) & free_mask;
        }
      }
    }
    uint64_t best_mask = 0;
    int64_t best = val[0];
    for (uint64_t m = 1; m < space; ++m)
      if (val[m] > best) {
        best = val[m];
        best_mask = m;
      }
    Rational v(best, w_total);
    v.canonicalize();
    return {v, Assignment::from_mask(n, best_mask)};
  }

  // direct scan fallback
  BruteForceResult out{Rational(-1), Assignment(n)};
  for (uint64_t m = 0; m < space; ++m) {
    Assignment sigma = Assignment::from_mask(n, m);
    const Rational v = value(psi, sigma);
    if (v > out.value) {
      out.value = v;
      out.argmax = sigma;
      if (v == 1) break;
    }
  }
  return out;
}

namespace {

Constraint draw_constraint(const BooleanFunction& f, int n, SplitMix64& rng) {
  const int k = f.arity();
  Constraint c;
  c.weight = 1;
  c.index.resize(k);
  c.sign.resize(k);
  for (int t = 0; t < k; ++t) {
    for (;;) {
      const int idx = 1 + static_cast<int>(rng.next_below(n));
      bool seen = false;
      for (int s = 0; s < t; ++s) seen = seen || c.index[s] == idx;
      if (!seen) {
        c.index[t] = idx;
        break;
      }
    }
  }
  for (int t = 0; t < k; ++t) c.sign[t] = rng.next_bool() ? 1 : -1;
  return c;
}

}  // namespace

CspInstance random_instance(const BooleanFunction& f, int n, int m,
                            uint64_t seed) {
  if (n < f.arity()) throw std::invalid_argument("n smaller than arity");
  if (m < 1) throw std::invalid_argument("need at least one constraint");
  CspInstance psi;
  psi.n = n;
  psi.predicate = f;
  SplitMix64 rng(seed);
  for (int i = 0; i < m; ++i) psi.constraints.push_back(draw_constraint(f, n, rng));
  return psi;
}

CspInstance planted_instance(const BooleanFunction& f, int n, int m,
                             uint64_t seed, const Assignment& sigma_star) {
  if (n < f.arity()) throw std::invalid_argument("n smaller than arity");
  if (m < 1) throw std::invalid_argument("need at least one constraint");
  if (sigma_star.n != n) throw std::invalid_argument("sigma* length mismatch");
  if (f.ones_count() == 0)
    throw std::invalid_argument("cannot plant into a constant-zero predicate");
  CspInstance psi;
  psi.n = n;
  psi.predicate = f;
  SplitMix64 rng(seed);
  for (int i = 0; i < m; ++i) {
    for (;;) {
      Constraint c = draw_constraint(f, n, rng);
      if (f.value(local_index(c, sigma_star))) {
        psi.constraints.push_back(std::move(c));
        break;
      }
    }
  }
  return psi;
}

}  // namespace monarch
