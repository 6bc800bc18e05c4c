#include "betacert/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"

namespace betacert {

namespace {

Tri within(const Enclosure& x, const Enclosure& lo, const Enclosure& hi) {
  Tri a = less_equal(lo, x);
  Tri b = less_equal(x, hi);
  if (a == Tri::yes && b == Tri::yes) return Tri::yes;
  if (a == Tri::no || b == Tri::no) return Tri::no;
  return Tri::unknown;
}

}  // namespace

DigitMaps::DigitMaps(const Enclosure& q_) : q(q_) {
  require_base(q, "digit maps");
  iq_hi = iq_right(q);
  f0_hi = iq_hi / q;
  f1_lo = q.reciprocal();
}

Enclosure DigitMaps::apply_extended(Digit d, const Enclosure& x) const {
  if (d < -1 || d > 1) throw DomainError("extended digit map: digit outside {-1,0,1}");
  return q * x - static_cast<long>(d);
}

Tri DigitMaps::in_domain(Digit d, const Enclosure& x) const {
  if (d == 0) return within(x, Enclosure(0L), f0_hi);
  if (d == 1) return within(x, f1_lo, iq_hi);
  throw DomainError("digit map: digit outside {0,1}");
}

Tri DigitMaps::in_iq(const Enclosure& x) const { return within(x, Enclosure(0L), iq_hi); }
Tri DigitMaps::in_switch(const Enclosure& x) const { return within(x, f1_lo, f0_hi); }

Enclosure DigitMaps::clamp_iq(const Enclosure& x) const { return x.clamp(Enclosure(0L), iq_hi); }

namespace {

struct Node {
  Enclosure v;
  bool certified = false;
  long group = -1;  // uncertain nodes of which at least one is real
  Word prefix;
};

}  // namespace

CountReport count_prefixes(const Enclosure& q, const Enclosure& x, int depth, std::size_t budget,
                           bool keep_prefixes) {
  if (depth < 1) throw DomainError("count_prefixes: depth must be at least 1");
  DigitMaps maps(q);
  Tri inside = maps.in_iq(x);
  if (inside == Tri::no) throw DomainError("count_prefixes: x lies outside I_q");

  CountReport r;
  r.q = q;
  r.x = x;
  r.depth = depth;
  std::vector<Node> level;
  // x in I_q is a precondition, so the root is real even when the enclosure pokes out.
  level.push_back({maps.clamp_iq(x), true, -1, {}});
  long next_group = 0;

  auto tally = [&](int d) {
    std::size_t cert = 0;
    std::vector<long> groups;
    for (const Node& n : level) {
      if (n.certified)
        ++cert;
      else if (n.group >= 0)
        groups.push_back(n.group);
    }
    std::sort(groups.begin(), groups.end());
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    r.levels.push_back({d, cert + groups.size(), level.size()});
  };
  tally(0);

  for (int d = 1; d <= depth; ++d) {
    std::vector<Node> next;
    next.reserve(level.size() * 2);
    for (Node& n : level) {
      Tri m0 = maps.in_domain(0, n.v);
      Tri m1 = maps.in_domain(1, n.v);
      if (m0 == Tri::no && m1 == Tri::no) {
        if (n.certified) throw InconsistencyError("count_prefixes: a certified point has no digit map");
        continue;
      }
      const bool both = m0 != Tri::no && m1 != Tri::no;
      if (both && m0 == Tri::yes && m1 == Tri::yes)
        r.branches.push_back({d - 1, n.v, n.certified});
      long pair_group = -1;
      if (n.certified && m0 == Tri::unknown && m1 == Tri::unknown) pair_group = next_group++;
      for (Digit e : {Digit{0}, Digit{1}}) {
        Tri m = e == 0 ? m0 : m1;
        if (m == Tri::no) continue;
        Node c;
        c.v = maps.apply(e, n.v);
        if (n.certified) {
          // A real point lies in at least one domain: a lone surviving child is real.
          c.certified = m == Tri::yes || !both;
          c.group = c.certified ? -1 : pair_group;
        } else {
          c.group = n.group;
        }
        if (c.certified) c.v = maps.clamp_iq(c.v);
        if (keep_prefixes) {
          c.prefix = n.prefix;
          c.prefix.push_back(e);
        }
        next.push_back(std::move(c));
      }
    }
    if (next.size() > budget) throw ResourceError("count_prefixes: node budget exceeded");

    // Groups with a single survivor are real; empty groups are impossible.
    std::vector<std::pair<long, std::size_t>> members;
    for (std::size_t i = 0; i < next.size(); ++i)
      if (!next[i].certified && next[i].group >= 0) members.push_back({next[i].group, i});
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size();) {
      std::size_t j = i;
      while (j < members.size() && members[j].first == members[i].first) ++j;
      if (j - i == 1) {
        Node& lone = next[members[i].second];
        lone.certified = true;
        lone.group = -1;
        lone.v = maps.clamp_iq(lone.v);
      }
      i = j;
    }
    for (const Node& n : level) {
      if (n.certified || n.group < 0) continue;
      auto it = std::lower_bound(members.begin(), members.end(), std::make_pair(n.group, std::size_t{0}));
      if (it == members.end() || it->first != n.group)
        throw InconsistencyError("count_prefixes: every branch of a certified point was excluded");
    }
    level = std::move(next);
    tally(d);
    if (r.levels[static_cast<std::size_t>(d)].certified_min < r.levels[static_cast<std::size_t>(d - 1)].certified_min)
      throw InconsistencyError("count_prefixes: certified count decreased");
  }
  if (keep_prefixes)
    for (const Node& n : level)
      if (n.certified) r.certified_prefixes.push_back(n.prefix);

  const int from = depth - std::max(1, static_cast<int>(std::lround(depth * 0.25)));
  r.stable = true;
  for (int d = std::max(0, from); d <= depth; ++d) {
    const CountLevel& l = r.levels[static_cast<std::size_t>(d)];
    r.stable = r.stable && l.certified_min == l.possible_max;
  }
  return r;
}

Tri map_uniquely_check(const Enclosure& q, const Enclosure& x, const Enclosure& target, const Word& word) {
  DigitMaps maps(q);
  if (maps.in_switch(x) == Tri::yes)
    throw PreconditionViolation("map_uniquely_check: x lies in the switch region");
  Enclosure y = x;
  bool unknown = false;
  for (Digit d : word) {
    if (d != 0 && d != 1) throw DomainError("map_uniquely_check: digit outside {0,1}");
    Tri in = maps.in_iq(y);
    Tri sw = maps.in_switch(y);
    Tri dom = maps.in_domain(d, y);
    if (in == Tri::no || sw == Tri::yes || dom == Tri::no) return Tri::no;
    if (in == Tri::unknown || sw == Tri::unknown || dom == Tri::unknown) unknown = true;
    y = maps.apply(d, y);
  }
  if (!y.overlaps(target)) return Tri::no;
  return unknown ? Tri::unknown : Tri::yes;
}

Certificate certify_m_expansions(const Enclosure& q, const Enclosure& x, int m, int depth, double window,
                                 std::size_t budget) {
  if (m < 1) throw DomainError("certify_m_expansions: m must be at least 1");
  if (!(window > 0 && window <= 1)) throw DomainError("certify_m_expansions: window must be in (0, 1]");
  Certificate c;
  c.claim = "m-expansions";
  c.param("q", q.to_string());
  c.param("x", x.to_string());
  c.param("m", std::to_string(m));
  c.param("depth", std::to_string(depth));
  c.evidence_depth = depth;
  CountReport r = count_prefixes(q, x, depth, budget);
  const int from = std::max(0, depth - static_cast<int>(std::lround(depth * window)));
  bool reached = true;
  bool capped = true;
  for (int d = from; d <= depth; ++d) {
    const CountLevel& l = r.levels[static_cast<std::size_t>(d)];
    reached = reached && l.certified_min == static_cast<std::size_t>(m);
    capped = capped && l.possible_max == static_cast<std::size_t>(m);
  }
  const std::string span = std::to_string(from) + ".." + std::to_string(depth);
  c.add(check_predicate("certified_min=" + std::to_string(m) + " on " + span, reached ? Tri::yes : Tri::no, true));
  c.add(check_predicate("possible_max=" + std::to_string(m) + " on " + span, capped ? Tri::yes : Tri::no, true));
  c.result("certified_min", std::to_string(r.levels.back().certified_min));
  c.result("possible_max", std::to_string(r.levels.back().possible_max));
  c.notes.push_back("prefix counts at finite depth are evidence for the number of expansions, not a proof");
  return c;
}

}  // namespace betacert
