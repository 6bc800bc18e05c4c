#include "betacert/gapset.hpp"

#include <algorithm>

#include "betacert/errors.hpp"

namespace betacert {

namespace {

void require_order(const Enclosure& a, const Enclosure& b, const char* what) {
  Tri t = less_equal(a, b);
  if (t == Tri::yes) return;
  if (t == Tri::no) throw MalformedInput(std::string("GapSet: ") + what);
  throw PrecisionError(std::string("GapSet: cannot certify ") + what);
}

}  // namespace

GapSet::GapSet(Enclosure lo, Enclosure hi, std::vector<Gap> gaps, int depth)
    : lo_(std::move(lo)), hi_(std::move(hi)), gaps_(std::move(gaps)), depth_(depth) {
  std::sort(gaps_.begin(), gaps_.end(),
            [](const Gap& a, const Gap& b) { return compare_lo(a.left, b.left) < 0; });
  validate();
}

void GapSet::validate() {
  require_order(lo_, hi_, "hull with lo > hi");
  const Enclosure* prev = &lo_;
  for (const Gap& g : gaps_) {
    if (!certainly_less(g.left, g.right)) {
      if (less(g.left, g.right) == Tri::no) throw MalformedInput("GapSet: empty gap");
      throw PrecisionError("GapSet: cannot certify gap with positive width");
    }
    require_order(*prev, g.left, prev == &lo_ ? "gap outside hull" : "overlapping gaps");
    prev = &g.right;
  }
  require_order(*prev, hi_, "gap outside hull");
}

std::vector<Interval> GapSet::components() const {
  std::vector<Interval> out;
  out.reserve(gaps_.size() + 1);
  const Enclosure* start = &lo_;
  for (const Gap& g : gaps_) {
    out.push_back({*start, g.left});
    start = &g.right;
  }
  out.push_back({*start, hi_});
  return out;
}

GapSet GapSet::affine(const Enclosure& scale, const Enclosure& shift) const {
  if (!scale.certainly_positive()) throw DomainError("GapSet::affine: scale must be positive");
  std::vector<Gap> g;
  g.reserve(gaps_.size());
  for (const Gap& x : gaps_) g.push_back({scale * x.left + shift, scale * x.right + shift});
  return GapSet(scale * lo_ + shift, scale * hi_ + shift, std::move(g), depth_);
}

GapSet GapSet::between(long first, long last) const {
  const long n = static_cast<long>(gaps_.size());
  if (first < -1 || last > n || first >= last) throw DomainError("GapSet::between: bad gap range");
  const Enclosure& a = first < 0 ? lo_ : gaps_[static_cast<std::size_t>(first)].right;
  const Enclosure& b = last >= n ? hi_ : gaps_[static_cast<std::size_t>(last)].left;
  std::vector<Gap> g(gaps_.begin() + (first + 1), gaps_.begin() + last);
  return GapSet(a, b, std::move(g), depth_);
}

GapSet GapSet::with_gap(const Gap& extra) const {
  std::vector<Gap> g(gaps_);
  g.push_back(extra);
  return GapSet(lo_, hi_, std::move(g), depth_);
}

}  // namespace betacert
