#pragma once

#include "betacert/enclosure.hpp"
#include "betacert/sequence.hpp"

#include <string>
#include <string_view>

namespace betacert {

struct BonacciRoot {
  int k = 0;
  Enclosure value;
};

// x^(k+1) - 2 x^k + 1 evaluated in interval arithmetic.
Enclosure bonacci_poly(const Enclosure& x, int k);

// Unique root in (1,2) of x^k = x^(k-1) + ... + 1, enclosed to width at most
// 2^-precision_bits.  Results are cached per (k, precision).
BonacciRoot bonacci_root(int k, int precision_bits = working_precision());

// Sum of w_j q^-j over a finite word.
Enclosure word_value(const Word& w, const Enclosure& q);

Enclosure pi_q(const SymbolicSeq& seq, const Enclosure& q);
inline Enclosure pi_q(const Word& w, const Enclosure& q) { return word_value(w, q); }

struct ProjectionGap {
  Enclosure difference;  // |pi_q1(seq) - pi_q2(seq)|
  Enclosure bound;       // |q1 - q2| / ((q1 - 1)(q2 - 1))
  // yes: difference <= bound certified; no: certainly violated.
  Tri within_bound = Tri::unknown;
};

ProjectionGap projection_gap(const Enclosure& q1, const Enclosure& q2, const SymbolicSeq& seq);

// Right end 1/(q-1) of I_q.
Enclosure iq_right(const Enclosure& q);

void require_base(const Enclosure& q, const char* who);

// A base q.  When root_of = k > 0 the base is exactly q_k (plus `offset`
// when has_offset), which lets constructions use exact identities at q_k.
struct Base {
  Enclosure value;
  int root_of = 0;
  bool has_offset = false;
  Enclosure offset;
  // When scale_exp > 0 the offset is exactly scale_num/scale_den * q_k^-scale_exp.
  long scale_num = 0, scale_den = 1;
  int scale_exp = 0;
  std::string text;

  bool exact_root() const { return root_of > 0 && !has_offset; }
  // Enclosure of q at the current working precision.
  Enclosure current() const;

  static Base generic(Enclosure q, std::string text = {});
  static Base root(int k);
  static Base root_offset(int k, Enclosure offset);
  static Base root_scaled(int k, long num, long den, int exp);
};

// "1.9995", "7/4", "golden", "qk:10", "qk:9+1e-8", "qk:10-3/1000000000".
Base parse_base(std::string_view text);

}  // namespace betacert
