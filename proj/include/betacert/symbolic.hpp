#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "betacert/enclosure.hpp"
#include "betacert/gapset.hpp"
#include "betacert/sequence.hpp"

namespace betacert {

inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 24;

bool avoids(const SymbolicSeq& seq, const Word& pattern);
// Finite word without padding.
bool word_avoids(const Word& w, const Word& pattern);

// Sequences over {0,1} avoiding 01^k and 10^k.
struct SubshiftSk {
  explicit SubshiftSk(int k);
  int k;
  Word up_pattern() const;    // 0 1^k
  Word down_pattern() const;  // 1 0^k
  bool contains(const SymbolicSeq& seq) const;
  bool admits_word(const Word& w) const;
  // Gap endpoint tails (01^(k-1))^inf and (10^(k-1))^inf.
  SymbolicSeq left_tail() const;
  SymbolicSeq right_tail() const;
};

// Automaton state after reading a finite S_k word: the last digit, and for a
// run preceded by the opposite digit ("anchored") its length.  A leading run
// is unconstrained, so its length is not tracked.
struct SkState {
  Digit last = -1;
  int run = 0;
  bool anchored = false;
  auto operator<=>(const SkState&) const = default;
};

class SkAutomaton {
 public:
  explicit SkAutomaton(int k);
  int k() const { return k_; }
  SkState start() const { return SkState{}; }
  std::optional<SkState> step(const SkState& s, Digit d) const;
  std::optional<SkState> run(SkState s, const Word& w) const;
  // s followed by period^inf stays inside S_k.
  bool accepts_periodic(SkState s, const Word& period) const;
  // The gap of a word ending in state s exists: both endpoint tails admissible.
  bool branches(const SkState& s) const;
  // Lexicographically least / greatest admissible continuation from s.
  SymbolicSeq lexmin(const SkState& s) const;
  SymbolicSeq lexmax(const SkState& s) const;

 private:
  SymbolicSeq greedy(SkState s, Digit preferred) const;
  int k_;
};

std::vector<Word> enumerate_sk_words(int k, int n, std::size_t budget = kDefaultEnumerationBudget);

struct SkGaps {
  GapSet set;
  std::vector<Word> deltas;  // deltas[i] labels set.gaps()[i]
  std::size_t collisions = 0;
};

// Gaps of pi_q(S_k) indexed by admissible delta with |delta| <= max_delta_len.
// With a nonempty prefix only the cylinder of words starting with it is
// produced, with hull equal to the convex hull of that cylinder.
SkGaps gaps_of_sk(const Enclosure& q, int k, int max_delta_len, const Word& prefix = {},
                  std::size_t budget = kDefaultEnumerationBudget);

// Convex hull of pi_q of the S_k cylinder of `prefix`.
Interval sk_cylinder_hull(const Enclosure& q, int k, const Word& prefix);

}  // namespace betacert
