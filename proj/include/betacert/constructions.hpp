#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "betacert/certificate.hpp"
#include "betacert/enclosure.hpp"
#include "betacert/gapset.hpp"
#include "betacert/realnum.hpp"
#include "betacert/sequence.hpp"
#include "betacert/thickness.hpp"

namespace betacert {

// g(x) = q^-k x + pi_q(1^(k-1) 0^inf), the inverse branch f_1^-(k-1) o f_0^-1.
struct GMap {
  Enclosure q;
  int k = 0;
  Enclosure contraction;  // q^-k
  Enclosure shift;        // pi_q(1^(k-1))
  Enclosure fixed_point;  // pi_q((1^(k-1) 0)^inf)

  static GMap make(const Enclosure& q, int k);
  Enclosure apply(const Enclosure& x, int iterations = 1) const;
  // Symbolic counterpart: prefix (1^(k-1) 0)^iterations.
  SymbolicSeq apply(const SymbolicSeq& seq, int iterations = 1) const;
  GapSet apply(const GapSet& set, int iterations = 1) const;
  Interval apply(const Interval& iv, int iterations = 1) const;
};

Enclosure g_apply(const GMap& map, const Enclosure& x, int iterations = 1);

struct EpsilonQ {
  Enclosure q;
  int k = 0;
  Enclosure value;  // 1 - pi_q((1^(k-1) 0)^inf)
  Tri negative = Tri::unknown;
  Tri positive = Tri::unknown;
};

EpsilonQ epsilon_q(const Base& q, int k);

// -q_k^(-(m+1)k+1) < eps_q < q_k^(-(m+2)k+1), with the hypothesis
// |q - q_k| < q_k^(-(m+2)k-3) recorded as its own check.
Certificate epsilon_bounds(const Base& q, int k, int m);

enum class Layout { below_root, at_root, above_root, unresolved };
const char* to_string(Layout l);

struct PQFamily {
  int m = 0;
  int k = 0;
  int depth = 0;           // depth of the structured thickness evaluation
  int explicit_depth = 0;  // |delta| bound of the explicit gap sets
  Enclosure q;
  Enclosure fixed_point;
  Enclosure epsilon;
  std::vector<Interval> p_hulls;  // conv P_0 .. conv P_m
  Interval q_hull;                // conv Q_m
  std::vector<GapSet> p_sets;
  GapSet q_set;
  ThicknessValue tau_p;  // thickness of the common model set of every P_i
  ThicknessValue tau_q;
  ThicknessValue tau_s;  // thickness of pi_q(S_(k-1)) at the same depth
  Enclosure diameter;        // common diameter |P_i| = |Q_m|
  Enclosure diameter_long_tails;  // q^(-(m+1)k+2) pi_q((1^(k-1) 0)^inf)
  Interval b;
  Enclosure beta;
  Layout layout = Layout::unresolved;
  std::vector<Check> checks;
};

// P_i = g^i(1 + q^(-(m-i)k) P*) and Q_m = g^m(Q*), where P* and Q* are the
// parts of pi_q(S_(k-1)) left of the gap of 0^(k-3) and right of the gap of
// 1^(k-3).  With explicit_depth < 0 the explicit gap sets are skipped.
PQFamily build_pq_family(const Base& q, int k, int m, int depth, int explicit_depth = -1);

enum class DigitClass { one, minus_one, free_zero, fixed_one, fixed_zero };
const char* to_string(DigitClass c);

struct AqDescription {
  Enclosure q;
  int k = 0;
  bool exact_root = false;  // c = 1^k 0^inf exactly
  Word c;                   // c_1 .. c_depth
  std::vector<DigitClass> classes;  // classes[j-1] for position j
  int free_count = 0;
  Enclosure remainder;  // q^depth (1 - pi_q(c_1..c_depth)), generic case
  std::vector<Enclosure> powers;         // q^-j, j = 0..depth+1
  std::vector<Enclosure> suffix_forced;  // sum of q^-j over forced ones j > n
  std::vector<Enclosure> suffix_open;    // same including free zeros

  int depth() const { return static_cast<int>(c.size()); }
  DigitClass cls(int position) const;  // 1-based; extends periodically at the root
  // Sum of q^-j over positions j > n that may carry a 1 in A_q (with
  // include_free) or are forced to 1 (without).
  Enclosure tail_bound(int n, bool include_free) const;
};

// Zero ranks start at n = 0: even ranks are free, ranks 1 mod 4 fixed to 1,
// ranks 3 mod 4 fixed to 0.
std::vector<DigitClass> classify(const Word& c);

AqDescription fixed_expansion_of_one(const Base& q, int k, int depth);

// Hulls of the depth-n cylinders of A_q, in increasing order.
std::vector<Interval> aq_cylinders(const AqDescription& desc, int depth);
GapSet aq_gapset(const AqDescription& desc, int depth);
// All A_q words of length n (tests; exponential).
std::vector<Word> aq_words(const AqDescription& desc, int n);

struct WitnessPoint {
  std::string label;  // "a1" .. "a4"
  Word tail;          // period after 1^k
  Enclosure closed_form;  // q^-k f / (q^4 - 1), equal to a - 1
  Enclosure projected;  // pi_q(1^k tail^inf)
  Enclosure image;      // g(a)
  SymbolicSeq image_minus_one;  // 0^(2k) tail^inf
};

struct WitnessReport {
  int k = 0;
  Enclosure q;
  std::array<WitnessPoint, 4> points;
  Enclosure min_separation;
  Enclosure expected_separation;  // q^-k q^(-k+1) / (q^4 - 1)
  Enclosure eps;                  // q^(-2k-4)
  Certificate certificate;
};

WitnessReport witness_points(int k);

struct IntersectionPoint {
  Enclosure x;  // lies within q^-depth scale of both sets
  Word s_word;  // S_(k-1) digits of x - 1
  Word a_word;  // A_q digits of g^-1(x)
  std::size_t nodes = 0;
};

// Depth-first search for a point of (pi_q(S_(k-1)) + 1) and g(pi_q(A_q)).
std::optional<IntersectionPoint> find_intersection(const AqDescription& desc, int depth,
                                                   std::size_t budget = 1000000);

}  // namespace betacert
