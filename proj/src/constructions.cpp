#include "betacert/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <utility>

#include "betacert/errors.hpp"
#include "betacert/symbolic.hpp"

namespace betacert {

namespace {

Word ones_then_zero(int k) { return concat(repeat(Digit{1}, static_cast<std::size_t>(k - 1)), Word{0}); }

bool same_root(const Base& q, int k) { return q.exact_root() && q.root_of == k; }

}  // namespace

GMap GMap::make(const Enclosure& q, int k) {
  if (k < 2) throw DomainError("g map: k must be at least 2");
  require_base(q, "g map");
  GMap g;
  g.q = q;
  g.k = k;
  g.contraction = q.pow(-static_cast<long>(k));
  g.shift = word_value(repeat(Digit{1}, static_cast<std::size_t>(k - 1)), q);
  g.fixed_point = pi_q(SymbolicSeq::periodic(ones_then_zero(k)), q);
  return g;
}

Enclosure GMap::apply(const Enclosure& x, int iterations) const {
  if (iterations < 0) throw DomainError("g map: negative iteration count");
  if (iterations == 0) return x;
  if (iterations == 1) return contraction * x + shift;
  // g^i(x) = fp + q^-ki (x - fp)
  return fixed_point + contraction.pow(iterations) * (x - fixed_point);
}

SymbolicSeq GMap::apply(const SymbolicSeq& seq, int iterations) const {
  if (iterations < 0) throw DomainError("g map: negative iteration count");
  return seq.prepend(repeat(ones_then_zero(k), static_cast<std::size_t>(iterations)));
}

GapSet GMap::apply(const GapSet& set, int iterations) const {
  if (iterations < 0) throw DomainError("g map: negative iteration count");
  Enclosure scale = contraction.pow(iterations);
  return set.affine(scale, fixed_point - scale * fixed_point);
}

Interval GMap::apply(const Interval& iv, int iterations) const {
  return {apply(iv.lo, iterations), apply(iv.hi, iterations)};
}

Enclosure g_apply(const GMap& map, const Enclosure& x, int iterations) {
  if (iterations < 1) throw DomainError("g_apply: iterations must be positive");
  return map.apply(x, iterations);
}

EpsilonQ epsilon_q(const Base& base, int k) {
  EpsilonQ e;
  e.k = k;
  e.q = base.current();
  require_base(e.q, "epsilon_q");
  if (same_root(base, k)) {
    e.value = Enclosure(0L);
    e.negative = Tri::no;
    e.positive = Tri::no;
    return e;
  }
  e.value = 1 - pi_q(SymbolicSeq::periodic(ones_then_zero(k)), e.q);
  e.negative = less(e.value, Enclosure(0L));
  e.positive = less(Enclosure(0L), e.value);
  return e;
}

Certificate epsilon_bounds(const Base& base, int k, int m) {
  if (m < 1) throw DomainError("epsilon_bounds: m must be at least 1");
  Certificate c;
  c.claim = "epsilon-bounds";
  c.param("k", std::to_string(k));
  c.param("m", std::to_string(m));
  c.param("q", base.text.empty() ? base.value.to_string() : base.text);
  const Enclosure qk = bonacci_root(k).value;
  const Enclosure q = base.current();
  const Enclosure rho = qk.pow(-static_cast<long>((m + 2) * k + 3));
  Enclosure dist = same_root(base, k) ? Enclosure(0L) : (q - qk).abs();
  Check& h = c.add(check_less("|q-q_k|<q_k^(-(m+2)k-3)", dist, rho));
  c.hypothesis_met = h.status == CheckStatus::certified;
  EpsilonQ e = epsilon_q(base, k);
  c.result("epsilon", e.value.to_string());
  c.add(check_less("-q_k^(-(m+1)k+1)<eps", -qk.pow(-static_cast<long>((m + 1) * k - 1)), e.value));
  c.add(check_less("eps<q_k^(-(m+2)k+1)", e.value, qk.pow(-static_cast<long>((m + 2) * k - 1))));
  return c;
}

const char* to_string(Layout l) {
  switch (l) {
    case Layout::below_root: return "q<q_k";
    case Layout::at_root: return "q=q_k";
    case Layout::above_root: return "q>q_k";
    case Layout::unresolved: return "unresolved";
  }
  return "?";
}

PQFamily build_pq_family(const Base& base, int k, int m, int depth, int explicit_depth) {
  if (k < 5) throw DomainError("build_pq_family: k must be at least 5");
  if (m < 1) throw DomainError("build_pq_family: m must be at least 1");
  if (depth < 0) throw DomainError("build_pq_family: negative depth");
  PQFamily f;
  f.m = m;
  f.k = k;
  f.depth = depth;
  f.explicit_depth = explicit_depth;
  f.q = base.current();
  const Enclosure& q = f.q;
  require_base(q, "build_pq_family");
  if (!certainly_less(bonacci_root(k - 1).value, q))
    throw PreconditionViolation("build_pq_family: q > q_(k-1) is not certified");

  const GMap g = GMap::make(q, k);
  f.fixed_point = g.fixed_point;
  EpsilonQ eps = epsilon_q(base, k);
  f.epsilon = eps.value;

  const std::size_t km2 = static_cast<std::size_t>(k - 2);
  const Word p_prefix = repeat(Digit{0}, km2);
  const Word q_prefix = repeat(Digit{1}, km2);
  const Interval p_star = sk_cylinder_hull(q, k - 1, p_prefix);
  const Interval q_star = sk_cylinder_hull(q, k - 1, q_prefix);
  const Enclosure scale = q.pow(-static_cast<long>(k) * m);

  // Left ends use the closed form fp + q^-ki eps, which keeps the common
  // fixed point out of the differences that decide the layout.
  const Enclosure p_width = scale * (p_star.hi - p_star.lo);
  for (int i = 0; i <= m; ++i) {
    Enclosure left = f.fixed_point + q.pow(-static_cast<long>(k) * i) * f.epsilon + scale * p_star.lo;
    f.p_hulls.push_back({left, left + p_width});
  }
  const Enclosure q_right = f.fixed_point + scale / (q.pow(k) - 1);
  const Enclosure q_width = scale * (q_star.hi - q_star.lo);
  f.q_hull = {q_right - q_width, q_right};
  f.diameter = p_width;
  f.diameter_long_tails = q.pow(-static_cast<long>((m + 1) * k - 2)) *
                     pi_q(SymbolicSeq::periodic(ones_then_zero(k)), q);

  auto add = [&](Check c) -> Check& {
    f.checks.push_back(std::move(c));
    return f.checks.back();
  };
  add(check_predicate("|P_i|=|Q_m|", p_width.overlaps(q_width) ? Tri::yes : Tri::no));
  {
    // Cross-check the hull ends against g^i(1 + q^-(m-i)k P*) and g^m(Q*).
    bool ok = true;
    for (int i = 0; i <= m; ++i) {
      Enclosure direct = g.apply(1 + q.pow(-static_cast<long>(k) * (m - i)) * p_star.lo, i);
      ok = ok && direct.overlaps(f.p_hulls[static_cast<std::size_t>(i)].lo);
    }
    ok = ok && g.apply(q_star.hi, m).overlaps(f.q_hull.hi);
    add(check_predicate("endpoint-closed-forms", ok ? Tri::yes : Tri::no));
  }

  if (same_root(base, k))
    f.layout = Layout::at_root;
  else if (eps.negative == Tri::yes)
    f.layout = Layout::below_root;
  else if (eps.positive == Tri::yes)
    f.layout = Layout::above_root;

  auto lname = [](int i) { return "L(P" + std::to_string(i) + ")"; };
  auto rname = [](int i) { return "R(P" + std::to_string(i) + ")"; };
  std::vector<Check> chain;
  std::vector<int> order;
  for (int i = 0; i <= m; ++i) order.push_back(i);
  if (f.layout == Layout::above_root) std::reverse(order.begin(), order.end());
  const auto& P = f.p_hulls;
  const auto at = [&](int i) -> const Interval& { return P[static_cast<std::size_t>(i)]; };
  chain.push_back(check_less("L(Q)<" + lname(order.front()), f.q_hull.lo, at(order.front()).lo));
  if (f.layout == Layout::at_root) {
    chain.push_back(check_predicate("L(P_i) equal", Tri::yes, false, "eps_q = 0 at q = q_k"));
  } else {
    for (std::size_t j = 0; j + 1 < order.size(); ++j)
      chain.push_back(check_less(lname(order[j]) + "<" + lname(order[j + 1]), at(order[j]).lo,
                                 at(order[j + 1]).lo));
  }
  chain.push_back(check_less(lname(order.back()) + "<R(Q)", at(order.back()).lo, f.q_hull.hi));
  chain.push_back(check_less("R(Q)<" + rname(order.front()), f.q_hull.hi, at(order.front()).hi));
  if (f.layout != Layout::at_root) {
    for (std::size_t j = 0; j + 1 < order.size(); ++j)
      chain.push_back(check_less(rname(order[j]) + "<" + rname(order[j + 1]), at(order[j]).hi,
                                 at(order[j + 1]).hi));
  }
  bool all = f.layout != Layout::unresolved;
  for (Check& c : chain) {
    if (c.status == CheckStatus::failed)
      throw InconsistencyError("build_pq_family: layout check " + c.name + " fails; q is outside the layout regime");
    all = all && c.status == CheckStatus::certified;
    add(std::move(c));
  }
  if (!all) f.layout = Layout::unresolved;

  Enclosure b_lo = f.q_hull.lo;
  Enclosure b_hi = f.q_hull.hi;
  for (const Interval& h : P) {
    b_lo = max(b_lo, h.lo);
    b_hi = min(b_hi, h.hi);
  }
  f.b = {b_lo, b_hi};
  add(check_less("B nonempty", b_lo, b_hi));
  f.beta = min(Enclosure::rational(1, 4), (b_hi - b_lo) / f.diameter);
  add(check_less("beta>1/8", Enclosure::rational(1, 8), f.beta));

  f.tau_p = sk_thickness(q, k - 1, depth, p_prefix);
  f.tau_q = sk_thickness(q, k - 1, depth, q_prefix);
  f.tau_s = sk_thickness(q, k - 1, depth);
  const Enclosure bound = q.pow(k - 4);
  add(check_less("tau(S_(k-1))>q^(k-4)", bound, f.tau_s.tau, true));
  add(check_less_equal("tau(P_i)>=q^(k-4)", bound, f.tau_p.tau, true));
  add(check_less_equal("tau(Q_m)>=q^(k-4)", bound, f.tau_q.tau, true));

  if (explicit_depth >= 0) {
    const int d = std::max(explicit_depth, k - 2);
    f.explicit_depth = d;
    GapSet ps = gaps_of_sk(q, k - 1, d, p_prefix).set;
    GapSet qs = gaps_of_sk(q, k - 1, d, q_prefix).set;
    for (int i = 0; i <= m; ++i) f.p_sets.push_back(ps.affine(scale, g.apply(Enclosure(1L), i)));
    f.q_set = qs.affine(scale, g.apply(Enclosure(0L), m));
  }
  return f;
}

const char* to_string(DigitClass c) {
  switch (c) {
    case DigitClass::one: return "one";
    case DigitClass::minus_one: return "minus_one";
    case DigitClass::free_zero: return "free";
    case DigitClass::fixed_one: return "fixed1";
    case DigitClass::fixed_zero: return "fixed0";
  }
  return "?";
}

namespace {

DigitClass zero_class(long rank) {
  if (rank % 2 == 0) return DigitClass::free_zero;
  return rank % 4 == 1 ? DigitClass::fixed_one : DigitClass::fixed_zero;
}

bool may_be_one(DigitClass c, bool include_free) {
  return c == DigitClass::one || c == DigitClass::fixed_one ||
         (include_free && c == DigitClass::free_zero);
}

}  // namespace

std::vector<DigitClass> classify(const Word& c) {
  std::vector<DigitClass> out;
  out.reserve(c.size());
  long rank = 0;
  for (Digit d : c) {
    if (d == 1)
      out.push_back(DigitClass::one);
    else if (d == -1)
      out.push_back(DigitClass::minus_one);
    else if (d == 0)
      out.push_back(zero_class(rank++));
    else
      throw DomainError("classify: digit outside {-1,0,1}");
  }
  return out;
}

DigitClass AqDescription::cls(int position) const {
  if (position < 1) throw DomainError("AqDescription: positions start at 1");
  if (position <= depth()) return classes[static_cast<std::size_t>(position - 1)];
  if (!exact_root) throw DomainError("AqDescription: position beyond the computed expansion");
  if (position <= k) return DigitClass::one;
  return zero_class(position - k - 1);
}

Enclosure AqDescription::tail_bound(int n, bool include_free) const {
  if (n < 0) throw DomainError("tail_bound: negative depth");
  const int D = depth();
  if (n > D && !exact_root) throw DomainError("tail_bound: depth exceeds the computed expansion");
  const int from = std::max(n, D);
  Enclosure beyond;
  if (exact_root) {
    // Classes repeat with period 4 after the stored word.
    Word block;
    for (int j = 1; j <= 4; ++j) block.push_back(may_be_one(cls(from + j), include_free) ? 1 : 0);
    beyond = q.pow(-static_cast<long>(from)) * pi_q(SymbolicSeq::periodic(block), q);
  } else {
    beyond = Enclosure::hull(Enclosure(0L), powers[static_cast<std::size_t>(D)] / (q - 1));
  }
  if (n >= D) return beyond;
  const auto& head = include_free ? suffix_open : suffix_forced;
  return head[static_cast<std::size_t>(n)] + beyond;
}

AqDescription fixed_expansion_of_one(const Base& base, int k, int depth) {
  if (k < 9) throw DomainError("fixed_expansion_of_one: k must be at least 9");
  AqDescription d;
  d.k = k;
  d.q = base.current();
  const Enclosure& q = d.q;
  require_base(q, "fixed_expansion_of_one");
  depth = std::max(depth, 2 * k + 4);
  const Enclosure qk = bonacci_root(k).value;
  const Enclosure radius = qk.pow(-static_cast<long>(2 * k + 6));
  const std::size_t uk = static_cast<std::size_t>(k);

  if (same_root(base, k)) {
    d.exact_root = true;
    d.c = concat(repeat(Digit{1}, uk), repeat(Digit{0}, static_cast<std::size_t>(depth - k)));
    d.remainder = Enclosure(0L);
  } else {
    Tri in = less_equal((q - qk).abs(), radius);
    if (base.root_of == k && base.scale_exp >= 2 * k + 6 && std::labs(base.scale_num) <= base.scale_den) in = Tri::yes;
    if (in == Tri::no) throw PreconditionViolation("fixed_expansion_of_one: |q - q_k| > q_k^(-2k-6)");
    if (in == Tri::unknown) throw PrecisionError("fixed_expansion_of_one: cannot decide |q - q_k| <= q_k^(-2k-6)");
    const Enclosure h = q / (q * q - 1);
    const Enclosure H = Enclosure::hull(-h, h);
    Enclosure y(1L);
    for (int i = 0; i < k; ++i) y = q * y - 1;
    for (int i = 0; i < k + 4; ++i) y = q * y;
    if (!y.overlaps(H)) throw PreconditionViolation("fixed_expansion_of_one: f_0^(k+4) f_1^k(1) lies outside H_q");
    if (!H.contains(y)) throw PrecisionError("fixed_expansion_of_one: cannot certify f_0^(k+4) f_1^k(1) in H_q");
    d.c = concat(repeat(Digit{1}, uk), repeat(Digit{0}, uk + 4));
    static const int blocks[5][2] = {{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}};
    const Enclosure q2 = q * q;
    while (static_cast<int>(d.c.size()) < depth) {
      bool placed = false;
      for (const auto& b : blocks) {
        Enclosure z = q2 * y - (q * b[0] + b[1]);
        if (H.contains(z)) {
          y = z;
          d.c.push_back(static_cast<Digit>(b[0]));
          d.c.push_back(static_cast<Digit>(b[1]));
          placed = true;
          break;
        }
      }
      if (!placed)
        throw PrecisionError("fixed_expansion_of_one: no block certifiable at position " +
                             std::to_string(d.c.size() + 1));
    }
    d.remainder = y;
  }
  d.classes = classify(d.c);
  d.free_count = static_cast<int>(std::count(d.classes.begin(), d.classes.end(), DigitClass::free_zero));

  const std::size_t D = d.c.size();
  d.powers.resize(D + 2);
  d.powers[0] = Enclosure(1L);
  const Enclosure r = q.reciprocal();
  for (std::size_t j = 1; j < d.powers.size(); ++j) d.powers[j] = d.powers[j - 1] * r;
  d.suffix_forced.assign(D + 1, Enclosure(0L));
  d.suffix_open.assign(D + 1, Enclosure(0L));
  for (std::size_t n = D; n-- > 0;) {
    // position n + 1
    const DigitClass c = d.classes[n];
    d.suffix_forced[n] = d.suffix_forced[n + 1] + (may_be_one(c, false) ? d.powers[n + 1] : Enclosure(0L));
    d.suffix_open[n] = d.suffix_open[n + 1] + (may_be_one(c, true) ? d.powers[n + 1] : Enclosure(0L));
  }
  return d;
}

namespace {

template <class Leaf>
void walk_aq(const AqDescription& desc, int n, std::size_t budget, Leaf&& leaf) {
  if (n < 0) throw DomainError("aq: negative depth");
  if (n > desc.depth()) throw DomainError("aq: depth exceeds the computed expansion");
  int free = 0;
  for (int j = 1; j <= n; ++j) free += desc.cls(j) == DigitClass::free_zero;
  if (free >= 62 || (std::size_t{1} << free) > budget) throw ResourceError("aq: too many cylinders");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int pos, const Enclosure& v) -> void {
    if (pos > n) {
      leaf(w, v);
      return;
    }
    DigitClass c = desc.cls(pos);
    if (c == DigitClass::free_zero) {
      w.push_back(0);
      self(self, pos + 1, v);
      w.back() = 1;
      self(self, pos + 1, v + desc.powers[static_cast<std::size_t>(pos)]);
      w.pop_back();
    } else {
      bool one = may_be_one(c, false);
      w.push_back(one ? 1 : 0);
      self(self, pos + 1, one ? v + desc.powers[static_cast<std::size_t>(pos)] : v);
      w.pop_back();
    }
  };
  rec(rec, 1, Enclosure(0L));
}

}  // namespace

std::vector<Interval> aq_cylinders(const AqDescription& desc, int depth) {
  std::vector<Interval> out;
  const Enclosure lo_tail = desc.tail_bound(depth, false);
  const Enclosure hi_tail = desc.tail_bound(depth, true);
  walk_aq(desc, depth, std::size_t{1} << 24, [&](const Word&, const Enclosure& v) {
    out.push_back({v + lo_tail, v + hi_tail});
  });
  return out;
}

GapSet aq_gapset(const AqDescription& desc, int depth) {
  std::vector<Interval> cyl = aq_cylinders(desc, depth);
  std::vector<Gap> gaps;
  gaps.reserve(cyl.size());
  for (std::size_t i = 0; i + 1 < cyl.size(); ++i) gaps.push_back({cyl[i].hi, cyl[i + 1].lo});
  return GapSet(cyl.front().lo, cyl.back().hi, std::move(gaps), depth);
}

std::vector<Word> aq_words(const AqDescription& desc, int n) {
  std::vector<Word> out;
  walk_aq(desc, n, std::size_t{1} << 22, [&](const Word& w, const Enclosure&) { out.push_back(w); });
  return out;
}

WitnessReport witness_points(int k) {
  if (k < 9) throw DomainError("witness_points: k must be at least 9");
  WitnessReport r;
  r.k = k;
  r.q = bonacci_root(k).value;
  const Enclosure& q = r.q;
  const GMap g = GMap::make(q, k);
  const Enclosure lead = q.pow(-static_cast<long>(k)) / (q.pow(4) - 1);
  const Enclosure q2 = q * q, q3 = q2 * q;
  const Word tails[4] = {{0, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}};
  const Enclosure factors[4] = {q2, q + q2, q2 + q3, q + q2 + q3};
  const std::size_t uk = static_cast<std::size_t>(k);
  Certificate& c = r.certificate;
  c.claim = "witness-points";
  c.param("k", std::to_string(k));
  SubshiftSk s(k - 1);
  for (int i = 0; i < 4; ++i) {
    WitnessPoint& p = r.points[static_cast<std::size_t>(i)];
    p.label = "a" + std::to_string(i + 1);
    p.tail = tails[i];
    p.closed_form = lead * factors[i];
    p.projected = pi_q(SymbolicSeq(repeat(Digit{1}, uk), tails[i]), q);
    p.image = g.apply(p.projected);
    p.image_minus_one = SymbolicSeq(repeat(Digit{0}, 2 * uk), tails[i]);
    // pi_(q_k)(1^k) = 1, so the closed form describes a - 1.
    c.add(check_predicate(p.label + "-1 closed form", p.closed_form.overlaps(p.projected - 1) ? Tri::yes : Tri::no));
    c.add(check_predicate("g(" + p.label + ")-1 symbolic",
                          (p.image - 1).overlaps(pi_q(p.image_minus_one, q)) ? Tri::yes : Tri::no));
    c.add(check_predicate("g(" + p.label + ")-1 in S_(k-1)", s.contains(p.image_minus_one) ? Tri::yes : Tri::no));
  }
  for (int i = 0; i < 3; ++i)
    c.add(check_less("a" + std::to_string(i + 1) + "<a" + std::to_string(i + 2),
                     r.points[static_cast<std::size_t>(i)].projected,
                     r.points[static_cast<std::size_t>(i + 1)].projected));
  r.min_separation = r.points[1].image - r.points[0].image;
  for (int i = 1; i < 3; ++i)
    r.min_separation = min(r.min_separation, r.points[static_cast<std::size_t>(i + 1)].image -
                                                 r.points[static_cast<std::size_t>(i)].image);
  r.expected_separation = q.pow(-static_cast<long>(k)) * q.pow(-static_cast<long>(k) + 1) / (q.pow(4) - 1);
  r.eps = q.pow(-static_cast<long>(2 * k + 4));
  c.add(check_predicate("min separation closed form",
                        r.min_separation.overlaps(r.expected_separation) ? Tri::yes : Tri::no));
  c.add(check_less_equal("min separation>=2eps", r.eps * 2, r.min_separation));
  c.result("min_separation", r.min_separation.to_string());
  c.result("eps", r.eps.to_string());
  // a1 < b1 < a2 < b2 with a's from one set and b's from the other; at q_k
  // every image lies in both sets, so the alternate assignment is valid.
  Certificate si = strongly_interleaved(r.points[0].image, r.points[2].image, r.points[1].image,
                                        r.points[3].image, r.eps);
  c.merge(si, "strong-interleaving");
  return r;
}

std::optional<IntersectionPoint> find_intersection(const AqDescription& desc, int depth,
                                                   std::size_t budget) {
  const int k = desc.k;
  if (depth < 1) throw DomainError("find_intersection: depth must be positive");
  if (!desc.exact_root && depth > desc.depth())
    throw DomainError("find_intersection: depth exceeds the computed expansion");
  const Enclosure& q = desc.q;
  const GMap g = GMap::make(q, k);
  SkAutomaton a(k - 1);
  std::vector<Enclosure> pw(static_cast<std::size_t>(depth) + 2);
  pw[0] = Enclosure(1L);
  for (std::size_t j = 1; j < pw.size(); ++j) pw[j] = pw[j - 1] / q;
  std::map<SkState, std::pair<Enclosure, Enclosure>> ends;
  auto tails = [&](const SkState& s) -> const std::pair<Enclosure, Enclosure>& {
    auto it = ends.find(s);
    if (it == ends.end()) it = ends.emplace(s, std::make_pair(pi_q(a.lexmin(s), q), pi_q(a.lexmax(s), q))).first;
    return it->second;
  };
  std::vector<Enclosure> ytail_lo, ytail_hi;
  for (int n = 0; n <= depth; ++n) {
    ytail_lo.push_back(desc.tail_bound(n, false));
    ytail_hi.push_back(desc.tail_bound(n, true));
  }

  struct XNode {
    SkState s;
    Enclosure v;
    int n;
  };
  struct YNode {
    Enclosure v;
    int n;
  };
  auto xhull = [&](const XNode& x) -> Interval {
    const auto& t = tails(x.s);
    const Enclosure& p = pw[static_cast<std::size_t>(x.n)];
    return {1 + x.v + p * t.first, 1 + x.v + p * t.second};
  };
  auto yhull = [&](const YNode& y) -> Interval {
    return {g.apply(y.v + ytail_lo[static_cast<std::size_t>(y.n)]),
            g.apply(y.v + ytail_hi[static_cast<std::size_t>(y.n)])};
  };
  auto disjoint = [](const Interval& u, const Interval& w) {
    return certainly_less(u.hi, w.lo) || certainly_less(w.hi, u.lo);
  };

  IntersectionPoint out;
  Word sw, aw;
  std::size_t nodes = 0;
  auto rec = [&](auto&& self, const XNode& x, const YNode& y) -> bool {
    if (++nodes > budget) throw ResourceError("find_intersection: node budget exceeded");
    const Interval hx = xhull(x);
    const Interval hy = yhull(y);
    if (disjoint(hx, hy)) return false;
    if (x.n >= depth && y.n >= depth) {
      Enclosure lo = max(hx.lo, hy.lo);
      Enclosure hi = min(hx.hi, hy.hi);
      if (certainly_less_equal(lo, hi)) {
        mpfr_t l, h;
        mpfr_init2(l, working_precision());
        mpfr_init2(h, working_precision());
        mpfr_set(l, lo.lo(), MPFR_RNDD);
        mpfr_set(h, hi.hi(), MPFR_RNDU);
        out.x = Enclosure::from_bounds(l, h);
        mpfr_clears(l, h, static_cast<mpfr_ptr>(nullptr));
      } else {
        out.x = Enclosure::hull(hy.lo, hy.hi);
      }
      out.s_word = sw;
      out.a_word = aw;
      return true;
    }
    const bool refine_x = y.n >= depth || (x.n < depth && mpfr_cmp((hx.hi - hx.lo).hi(), (hy.hi - hy.lo).hi()) >= 0);
    if (refine_x) {
      for (Digit d : {Digit{0}, Digit{1}}) {
        auto ns = a.step(x.s, d);
        if (!ns) continue;
        sw.push_back(d);
        XNode c{*ns, d ? x.v + pw[static_cast<std::size_t>(x.n + 1)] : x.v, x.n + 1};
        if (self(self, c, y)) return true;
        sw.pop_back();
      }
      return false;
    }
    const DigitClass cls = desc.cls(y.n + 1);
    std::vector<Digit> options;
    if (cls == DigitClass::free_zero)
      options = {0, 1};
    else
      options = {static_cast<Digit>(may_be_one(cls, false) ? 1 : 0)};
    for (Digit d : options) {
      aw.push_back(d);
      YNode c{d ? y.v + pw[static_cast<std::size_t>(y.n + 1)] : y.v, y.n + 1};
      if (self(self, x, c)) return true;
      aw.pop_back();
    }
    return false;
  };
  bool found = rec(rec, XNode{a.start(), Enclosure(0L), 0}, YNode{Enclosure(0L), 0});
  out.nodes = nodes;
  if (!found) return std::nullopt;
  return out;
}

}  // namespace betacert
