#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monarch/rational.hpp"

namespace monarch {

constexpr int kMaxArity = 24;

/// Boolean function f : {-1,1}^k -> {0,1} stored as a truth table bit field.
/// Bit t of the table index m encodes x_{t+1}: bit set means x_{t+1} = +1.
class BooleanFunction {
 public:
  BooleanFunction(int arity, bool fill = false);

  int arity() const { return arity_; }
  uint32_t table_size() const { return uint32_t{1} << arity_; }

  bool value(uint32_t m) const {
    return (words_[m >> 6] >> (m & 63)) & 1;
  }
  void set(uint32_t m, bool v) {
    const uint64_t bit = uint64_t{1} << (m & 63);
    if (v)
      words_[m >> 6] |= bit;
    else
      words_[m >> 6] &= ~bit;
  }

  uint64_t ones_count() const;
  const std::vector<uint64_t>& words() const { return words_; }

  /// Truth table as a hex string, 2^(k-2) digits, most significant first;
  /// bit m of the hex value is the table entry at index m.
  std::string table_hex() const;
  static BooleanFunction from_table_hex(int arity, const std::string& hex);

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }

 private:
  int arity_;
  std::vector<uint64_t> words_;
};

/// Linear threshold function sign(sum w_i x_i + theta), sign(z <= 0) = 0.
struct LtfSpec {
  std::vector<Rational> weights;
  Rational theta = 0;

  int arity() const { return static_cast<int>(weights.size()); }

  /// Text form: "ltf k theta w1 ... wk".
  std::string str() const;
  static LtfSpec parse(const std::string& text);
};

struct ChowVector {
  Rational degree0;                // = rho(f)
  std::vector<Rational> degree1;   // degree1[i] = f^({i+1})
};

struct FourierSpectrum {
  int arity;
  std::vector<Rational> coeff;  // indexed by subset bitmask
};

BooleanFunction ltf_to_function(const LtfSpec& spec);
bool is_balanced_ltf(const LtfSpec& spec);

Rational rho(const BooleanFunction& f);
FourierSpectrum fourier_spectrum(const BooleanFunction& f);
/// Degree-0/1 coefficients only; O(k 2^k) bit operations, no 2^k rational
/// table is materialized.
ChowVector chow_parameters(const BooleanFunction& f);

/// min over satisfying x of sum_i f^({i}) x_i. Throws std::domain_error for
/// the constant-zero function (minimum over an empty set).
Rational epsilon0(const BooleanFunction& f);
/// min{eps0/(3k), 2 eps0^2 / (9 rho k^2)}. Throws when rho(f) = 0.
Rational epsilon_star(const BooleanFunction& f);

LtfSpec mon(int k);
LtfSpec wmon(int k, int j);
LtfSpec maj(int k);

/// True iff sign applied to f's own degree-1 Chow weights reproduces f.
bool chow_defines_self(const BooleanFunction& f);

/// Closed-form Chow parameters of WMON_{k,j}: (president, citizen).
/// Requires k + j even (odd total vote count), 1 <= j < k.
std::pair<Rational, Rational> wmon_chow_closed_form(int k, int j);

enum class Ltf4Kind { Dictator, Mon4, Maj3 };

struct Ltf4Classification {
  Ltf4Kind kind;
  // canonicalization applied before the weight comparison:
  // canonical weight slot s holds |w_{perm[s]+1}|, flip[s] set when the
  // original weight was negated
  std::array<int, 4> perm;
  std::array<bool, 4> flipped;
};

/// Classifies a balanced LTF on at most 4 variables (padded with zero
/// weights) as a dictator, MON_4 or MAJ on the three largest weights.
/// Throws std::invalid_argument when the spec is not a balanced LTF.
Ltf4Classification classify_balanced_ltf4(const LtfSpec& spec);

const char* ltf4_kind_name(Ltf4Kind kind);

/// The truth table a classification verdict asserts, on the canonical
/// (sorted, sign-flipped) variables.
BooleanFunction ltf4_kind_function(Ltf4Kind kind);

}  // namespace monarch
