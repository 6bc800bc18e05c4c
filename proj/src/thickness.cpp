#include "betacert/thickness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"
#include "betacert/symbolic.hpp"

namespace betacert {

bool ThicknessValue::at_least(const Enclosure& bound) const {
  if (infinite) return true;
  return certainly_less_equal(bound, tau);
}

std::string ThicknessValue::to_string(int digits) const {
  if (infinite) return "inf";
  return tau.to_string(digits);
}

namespace {

Enclosure bridge_ratio(const GapSet& set, std::size_t i, const std::size_t* prev,
                       const std::size_t* next, const Enclosure& diam) {
  const Gap& g = set.gaps()[i];
  Enclosure left = g.left - (prev ? set.gaps()[*prev].right : set.lo());
  Enclosure right = (next ? set.gaps()[*next].left : set.hi()) - g.right;
  return min(left, right) / diam;
}

void fold_min(ThicknessValue& out, const Enclosure& ratio, bool& first) {
  out.tau = first ? ratio : min(out.tau, ratio);
  first = false;
}

}  // namespace

ThicknessValue thickness(const GapSet& set) {
  ThicknessValue out;
  out.depth = set.depth();
  out.gap_count = set.size();
  const std::size_t n = set.size();
  if (n == 0) {
    out.infinite = true;
    return out;
  }
  std::vector<Enclosure> diam;
  diam.reserve(n);
  for (const Gap& g : set.gaps()) diam.push_back(g.diameter());

  std::vector<std::size_t> by_hi(n), by_lo(n);
  std::iota(by_hi.begin(), by_hi.end(), 0);
  std::iota(by_lo.begin(), by_lo.end(), 0);
  std::stable_sort(by_hi.begin(), by_hi.end(),
                   [&](std::size_t a, std::size_t b) { return mpfr_cmp(diam[a].hi(), diam[b].hi()) > 0; });
  std::stable_sort(by_lo.begin(), by_lo.end(),
                   [&](std::size_t a, std::size_t b) { return mpfr_cmp(diam[a].lo(), diam[b].lo()) > 0; });

  // A gap j bounds the bridges of gap i when |G_j| >= |G_i| is possible.
  std::set<std::size_t> stoppers;
  std::size_t inserted = 0;
  bool first = true;
  for (std::size_t i : by_lo) {
    while (inserted < n && mpfr_cmp(diam[by_hi[inserted]].hi(), diam[i].lo()) >= 0)
      stoppers.insert(by_hi[inserted++]);
    auto it = stoppers.find(i);
    const std::size_t* prev = nullptr;
    const std::size_t* next = nullptr;
    if (it != stoppers.begin()) prev = &*std::prev(it);
    if (std::next(it) != stoppers.end()) next = &*std::next(it);
    fold_min(out, bridge_ratio(set, i, prev, next, diam[i]), first);
  }
  return out;
}

ThicknessValue thickness_in_order(const GapSet& set, const std::vector<std::size_t>& order) {
  ThicknessValue out;
  out.depth = set.depth();
  out.gap_count = set.size();
  if (order.size() != set.size()) throw DomainError("thickness_in_order: order is not a permutation");
  if (order.empty()) {
    out.infinite = true;
    return out;
  }
  std::set<std::size_t> processed;
  bool first = true;
  for (std::size_t i : order) {
    if (i >= set.size() || !processed.insert(i).second)
      throw DomainError("thickness_in_order: order is not a permutation");
    auto it = processed.find(i);
    const std::size_t* prev = nullptr;
    const std::size_t* next = nullptr;
    if (it != processed.begin()) prev = &*std::prev(it);
    if (std::next(it) != processed.end()) next = &*std::next(it);
    fold_min(out, bridge_ratio(set, i, prev, next, set.gaps()[i].diameter()), first);
  }
  return out;
}

ThicknessValue sk_thickness(const Enclosure& q, int k, int depth, const Word& prefix) {
  SubshiftSk sk(k);
  BonacciRoot root = bonacci_root(k, working_precision());
  if (!certainly_less(root.value, q))
    throw PreconditionViolation("sk_thickness: q > q_k is not certified");
  SkAutomaton a(k);
  auto s0 = a.run(a.start(), prefix);
  if (!s0) throw DomainError("sk_thickness: prefix is not an S_k word");

  // The gap of delta has diameter q^-n w.  Its bridges at any depth >= n are
  // exactly the hulls of the cylinders delta0 and delta1, of diameters
  // q^-(n+1) D(s0) and q^-(n+1) D(s1) with D the diameter of the follower set.
  const Enclosure w = pi_q(sk.right_tail(), q) - pi_q(sk.left_tail(), q);
  const Enclosure scale = q * w;
  std::map<SkState, Enclosure> follower;
  auto diameter = [&](const SkState& s) -> const Enclosure& {
    auto it = follower.find(s);
    if (it == follower.end())
      it = follower.emplace(s, pi_q(a.lexmax(s), q) - pi_q(a.lexmin(s), q)).first;
    return it->second;
  };

  ThicknessValue out;
  out.depth = depth;
  std::set<SkState> level{*s0};
  std::set<SkState> counted;
  bool first = true;
  for (int n = static_cast<int>(prefix.size()); n <= depth && !level.empty(); ++n) {
    std::set<SkState> next;
    for (const SkState& s : level) {
      if (a.branches(s)) {
        if (counted.insert(s).second) {
          Enclosure r = min(diameter(*a.step(s, 0)), diameter(*a.step(s, 1))) / scale;
          fold_min(out, r, first);
        }
      }
      for (Digit d : {Digit{0}, Digit{1}})
        if (auto c = a.step(s, d)) next.insert(*c);
    }
    // Once the reachable set repeats no new ratio can appear.
    if (next == level) break;
    level = std::move(next);
  }
  out.gap_count = counted.size();
  if (first) out.infinite = true;
  return out;
}

Tri inside_gap(const GapSet& x, const GapSet& y) {
  bool unknown = false;
  auto consider = [&](Tri t) {
    if (t == Tri::unknown) unknown = true;
    return t == Tri::yes;
  };
  if (consider(less(x.hi(), y.lo()))) return Tri::yes;
  if (consider(less(y.hi(), x.lo()))) return Tri::yes;
  for (const Gap& g : y.gaps()) {
    Tri a = less(g.left, x.lo());
    Tri b = less(x.hi(), g.right);
    Tri both = (a == Tri::yes && b == Tri::yes) ? Tri::yes
               : (a == Tri::no || b == Tri::no) ? Tri::no
                                                : Tri::unknown;
    if (consider(both)) return Tri::yes;
  }
  return unknown ? Tri::unknown : Tri::no;
}

Tri interleaving(const GapSet& a, const GapSet& b) {
  Tri ab = inside_gap(a, b);
  Tri ba = inside_gap(b, a);
  if (ab == Tri::yes || ba == Tri::yes) return Tri::no;
  if (ab == Tri::no && ba == Tri::no) return Tri::yes;
  return Tri::unknown;
}

Certificate strongly_interleaved(const Enclosure& a1, const Enclosure& a2, const Enclosure& b1,
                                 const Enclosure& b2, const Enclosure& eps) {
  if (!eps.certainly_positive()) throw DomainError("strongly_interleaved: eps must be positive");
  Certificate c;
  c.claim = "strong-interleaving";
  c.param("eps", eps.to_string());
  Enclosure two_eps = eps * 2;
  c.add(check_less_equal("b1-a1>=2eps", two_eps, b1 - a1));
  c.add(check_less_equal("a2-b1>=2eps", two_eps, a2 - b1));
  c.add(check_less_equal("b2-a2>=2eps", two_eps, b2 - a2));
  return c;
}

namespace {

Enclosure distance_to(const Enclosure& x, const std::vector<Interval>& comps) {
  // Components are sorted and disjoint; only those next to x can be nearest.
  auto it = std::upper_bound(comps.begin(), comps.end(), x, [](const Enclosure& v, const Interval& c) {
    return mpfr_cmp(v.lo(), c.lo.lo()) < 0;
  });
  std::ptrdiff_t idx = it - comps.begin();
  std::ptrdiff_t from = std::max<std::ptrdiff_t>(0, idx - 2);
  std::ptrdiff_t to = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(comps.size()), idx + 2);
  Enclosure best;
  bool first = true;
  for (std::ptrdiff_t i = from; i < to; ++i) {
    const Interval& c = comps[static_cast<std::size_t>(i)];
    Enclosure d = max(max(c.lo - x, x - c.hi), Enclosure(0L));
    best = first ? d : min(best, d);
    first = false;
  }
  return best;
}

Tri member(const Enclosure& x, const std::vector<Interval>& comps) {
  Enclosure d = distance_to(x, comps);
  if (mpfr_zero_p(d.hi())) return Tri::yes;
  if (d.certainly_positive()) return Tri::no;
  return Tri::unknown;
}

// sup over x in A of dist(x, B)
Enclosure directed_distance(const GapSet& a, const GapSet& b) {
  std::vector<Interval> ca = a.components();
  std::vector<Interval> cb = b.components();
  Enclosure best(0L);
  for (const Interval& c : ca) {
    best = max(best, distance_to(c.lo, cb));
    best = max(best, distance_to(c.hi, cb));
  }
  for (const Gap& g : b.gaps()) {
    Enclosure m = (g.left + g.right) / 2;
    Tri in = member(m, ca);
    if (in == Tri::no) continue;
    Enclosure d = distance_to(m, cb);
    if (in == Tri::unknown) d = Enclosure::hull(Enclosure(0L), d);
    best = max(best, d);
  }
  return best;
}

}  // namespace

Enclosure hausdorff_distance(const GapSet& a, const GapSet& b) {
  return max(directed_distance(a, b), directed_distance(b, a));
}

Certificate newhouse_certificate(const GapSet& a, const GapSet& b) {
  return newhouse_certificate(a, b, thickness(a), thickness(b));
}

Certificate newhouse_certificate(const GapSet& a, const GapSet& b, const ThicknessValue& ta,
                                 const ThicknessValue& tb) {
  Certificate c;
  c.claim = "newhouse-intersection";
  const bool finite = a.depth() >= 0 || b.depth() >= 0 || ta.depth >= 0 || tb.depth >= 0;
  c.evidence_depth = std::max({a.depth(), b.depth(), ta.depth, tb.depth, 0});
  c.add(check_predicate("interleaved", interleaving(a, b), finite));
  c.result("tau_a", ta.to_string());
  c.result("tau_b", tb.to_string());
  if (ta.infinite || tb.infinite) {
    const ThicknessValue& other = ta.infinite ? tb : ta;
    Tri pos = other.infinite || other.tau.certainly_positive() ? Tri::yes : Tri::unknown;
    c.add(check_predicate("tau_product>=1", pos, finite, "one thickness is infinite"));
  } else {
    c.add(check_less_equal("tau_product>=1", Enclosure(1L), ta.tau * tb.tau, finite));
  }
  return c;
}

}  // namespace betacert
