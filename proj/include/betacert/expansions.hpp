#pragma once

#include <cstddef>
#include <vector>

#include "betacert/certificate.hpp"
#include "betacert/enclosure.hpp"
#include "betacert/sequence.hpp"

namespace betacert {

inline constexpr std::size_t kDefaultNodeBudget = 1000000;

// f_0(x) = qx on [0, 1/(q(q-1))] and f_1(x) = qx - 1 on [1/q, 1/(q-1)].
struct DigitMaps {
  Enclosure q;
  Enclosure iq_hi;     // 1/(q-1)
  Enclosure f0_hi;     // 1/(q(q-1))
  Enclosure f1_lo;     // 1/q

  explicit DigitMaps(const Enclosure& q);
  Enclosure apply(Digit d, const Enclosure& x) const { return q * x - static_cast<long>(d); }
  // Extended maps on I*_q = [-1/(q-1), 1/(q-1)], digits -1, 0, 1.
  Enclosure apply_extended(Digit d, const Enclosure& x) const;
  Tri in_domain(Digit d, const Enclosure& x) const;
  Tri in_iq(const Enclosure& x) const;
  Tri in_switch(const Enclosure& x) const;  // J_q = [1/q, 1/(q(q-1))]
  Enclosure clamp_iq(const Enclosure& x) const;
};

struct CountLevel {
  int depth = 0;
  std::size_t certified_min = 0;
  std::size_t possible_max = 0;
};

struct BranchEvent {
  int depth = 0;
  Enclosure value;
  bool certified = false;
};

struct CountReport {
  Enclosure q;
  Enclosure x;
  int depth = 0;
  std::vector<CountLevel> levels;  // levels[d] for d = 0..depth
  std::vector<BranchEvent> branches;
  bool stable = false;  // certified_min == possible_max over the final quarter
  std::vector<Word> certified_prefixes;  // filled when requested
};

// Breadth-first expansion of the orbit tree of x.  certified_min counts
// prefixes that certainly belong to an expansion of x; possible_max counts
// every prefix that could not be excluded.
CountReport count_prefixes(const Enclosure& q, const Enclosure& x, int depth,
                           std::size_t budget = kDefaultNodeBudget, bool keep_prefixes = false);

// Applies f_(word[0]), f_(word[1]), ... to x.  yes: every visited point lies
// certainly in I_q \ J_q, each step is certainly in its domain, and the
// result overlaps `target`.  no: a step certainly fails or the result is
// certainly different.  Throws PreconditionViolation when x is certainly in J_q.
Tri map_uniquely_check(const Enclosure& q, const Enclosure& x, const Enclosure& target, const Word& word);

Certificate certify_m_expansions(const Enclosure& q, const Enclosure& x, int m, int depth,
                                 double window = 0.25, std::size_t budget = kDefaultNodeBudget);

}  // namespace betacert
