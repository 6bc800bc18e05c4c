#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "betacert/certificate.hpp"
#include "betacert/enclosure.hpp"
#include "betacert/gapset.hpp"
#include "betacert/sequence.hpp"

namespace betacert {

struct ThicknessValue {
  Enclosure tau;
  bool infinite = false;  // no bounded gaps
  int depth = -1;         // truncation depth of the underlying set, -1 if exact
  std::size_t gap_count = 0;

  bool at_least(const Enclosure& bound) const;  // tau >= bound certified
  std::string to_string(int digits = 12) const;
};

// Newhouse thickness of the finite union.  Gaps are processed by decreasing
// diameter; a gap whose diameter enclosure overlaps the current one is
// treated as already processed, so tau.lo is a rigorous lower bound and the
// value is exact when overlapping diameters are truly equal.
ThicknessValue thickness(const GapSet& set);

// Stepwise construction with an explicit processing order (indices into
// set.gaps()).  Reference implementation for tests.
ThicknessValue thickness_in_order(const GapSet& set, const std::vector<std::size_t>& order);

// Thickness of the depth-truncated gap set of pi_q(S_k) (restricted to the
// cylinder of `prefix`) computed from the S_k automaton instead of the
// explicit gap list.  Agrees with thickness(gaps_of_sk(q, k, depth, prefix).set).
ThicknessValue sk_thickness(const Enclosure& q, int k, int depth, const Word& prefix = {});

// yes: x is certainly inside one gap of y (bounded or unbounded).
Tri inside_gap(const GapSet& x, const GapSet& y);
Tri interleaving(const GapSet& a, const GapSet& b);
inline bool interleaved(const GapSet& a, const GapSet& b) { return interleaving(a, b) == Tri::yes; }

Certificate strongly_interleaved(const Enclosure& a1, const Enclosure& a2, const Enclosure& b1,
                                 const Enclosure& b2, const Enclosure& eps);

Enclosure hausdorff_distance(const GapSet& a, const GapSet& b);

Certificate newhouse_certificate(const GapSet& a, const GapSet& b);
Certificate newhouse_certificate(const GapSet& a, const GapSet& b, const ThicknessValue& ta,
                                 const ThicknessValue& tb);

}  // namespace betacert
