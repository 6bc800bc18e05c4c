#pragma once

#include <cstddef>
#include <vector>

#include "betacert/enclosure.hpp"

namespace betacert {

struct Gap {
  Enclosure left;
  Enclosure right;
  Enclosure diameter() const { return right - left; }
};

struct Interval {
  Enclosure lo;
  Enclosure hi;
};

// Convex hull [lo, hi] with a sorted list of disjoint bounded open gaps.
// The represented set is the hull minus the gaps: a finite union of closed
// intervals, used as an outer approximation of a Cantor set.
class GapSet {
 public:
  GapSet() = default;
  // Sorts the gaps and validates the ordering.  `depth` < 0 means the set is
  // exactly the finite union; otherwise it records the truncation depth.
  GapSet(Enclosure lo, Enclosure hi, std::vector<Gap> gaps, int depth = -1);

  const Enclosure& lo() const { return lo_; }
  const Enclosure& hi() const { return hi_; }
  const std::vector<Gap>& gaps() const { return gaps_; }
  std::size_t size() const { return gaps_.size(); }
  int depth() const { return depth_; }

  // Closed intervals left after removing all gaps.
  std::vector<Interval> components() const;

  // x -> scale * x + shift, scale > 0.
  GapSet affine(const Enclosure& scale, const Enclosure& shift) const;
  // Part of the set between the right end of gap `first` and the left end of
  // gap `last`; first = -1 stands for the hull start, last = size() for its end.
  GapSet between(long first, long last) const;
  // The set with one more gap removed.
  GapSet with_gap(const Gap& g) const;

 private:
  void validate();
  Enclosure lo_;
  Enclosure hi_;
  std::vector<Gap> gaps_;
  int depth_ = -1;
};

}  // namespace betacert
