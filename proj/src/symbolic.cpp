#include "betacert/symbolic.hpp"

#include <algorithm>
#include <map>

#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"

namespace betacert {

bool word_avoids(const Word& w, const Word& pattern) {
  if (pattern.empty()) throw DomainError("avoids: empty pattern");
  if (w.size() < pattern.size()) return true;
  return std::search(w.begin(), w.end(), pattern.begin(), pattern.end()) == w.end();
}

bool avoids(const SymbolicSeq& seq, const Word& pattern) {
  if (pattern.empty()) throw DomainError("avoids: empty pattern");
  std::size_t period = seq.period().empty() ? 1 : seq.period().size();
  std::size_t n = seq.preperiod().size() + 2 * period + pattern.size();
  return word_avoids(seq.take(n), pattern);
}

SubshiftSk::SubshiftSk(int k_) : k(k_) {
  if (k < 2) throw DomainError("S_k requires k >= 2");
}

Word SubshiftSk::up_pattern() const { return concat(Word{0}, repeat(Digit{1}, static_cast<std::size_t>(k))); }
Word SubshiftSk::down_pattern() const { return concat(Word{1}, repeat(Digit{0}, static_cast<std::size_t>(k))); }

bool SubshiftSk::contains(const SymbolicSeq& seq) const {
  for (std::size_t i = 0; i < seq.preperiod().size(); ++i)
    if (seq.preperiod()[i] < 0) return false;
  for (Digit d : seq.period())
    if (d < 0) return false;
  return avoids(seq, up_pattern()) && avoids(seq, down_pattern());
}

bool SubshiftSk::admits_word(const Word& w) const {
  for (Digit d : w)
    if (d != 0 && d != 1) return false;
  return word_avoids(w, up_pattern()) && word_avoids(w, down_pattern());
}

SymbolicSeq SubshiftSk::left_tail() const {
  return SymbolicSeq::periodic(concat(Word{0}, repeat(Digit{1}, static_cast<std::size_t>(k - 1))));
}

SymbolicSeq SubshiftSk::right_tail() const {
  return SymbolicSeq::periodic(concat(Word{1}, repeat(Digit{0}, static_cast<std::size_t>(k - 1))));
}

SkAutomaton::SkAutomaton(int k) : k_(k) {
  if (k < 2) throw DomainError("S_k requires k >= 2");
}

std::optional<SkState> SkAutomaton::step(const SkState& s, Digit d) const {
  if (d != 0 && d != 1) return std::nullopt;
  if (s.last < 0) return SkState{d, 0, false};
  if (d == s.last) {
    if (!s.anchored) return s;
    if (s.run + 1 >= k_) return std::nullopt;
    return SkState{d, s.run + 1, true};
  }
  return SkState{d, 1, true};
}

std::optional<SkState> SkAutomaton::run(SkState s, const Word& w) const {
  for (Digit d : w) {
    auto n = step(s, d);
    if (!n) return std::nullopt;
    s = *n;
  }
  return s;
}

bool SkAutomaton::accepts_periodic(SkState s, const Word& period) const {
  if (period.empty()) return accepts_periodic(s, Word{0});
  std::vector<SkState> seen;
  for (;;) {
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) return true;
    seen.push_back(s);
    auto n = run(s, period);
    if (!n) return false;
    s = *n;
  }
}

bool SkAutomaton::branches(const SkState& s) const {
  const std::size_t km1 = static_cast<std::size_t>(k_ - 1);
  return accepts_periodic(s, concat(Word{0}, repeat(Digit{1}, km1))) &&
         accepts_periodic(s, concat(Word{1}, repeat(Digit{0}, km1)));
}

SymbolicSeq SkAutomaton::greedy(SkState s, Digit preferred) const {
  // Every state has at least one successor, so the greedy path is infinite and
  // eventually periodic in the (finite) state space.
  std::vector<SkState> states;
  Word digits;
  for (;;) {
    auto it = std::find(states.begin(), states.end(), s);
    if (it != states.end()) {
      std::size_t at = static_cast<std::size_t>(it - states.begin());
      Word pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(at));
      Word per(digits.begin() + static_cast<std::ptrdiff_t>(at), digits.end());
      return SymbolicSeq(pre, per);
    }
    states.push_back(s);
    auto n = step(s, preferred);
    Digit d = preferred;
    if (!n) {
      d = static_cast<Digit>(1 - preferred);
      n = step(s, d);
    }
    digits.push_back(d);
    s = *n;
  }
}

SymbolicSeq SkAutomaton::lexmin(const SkState& s) const { return greedy(s, 0); }
SymbolicSeq SkAutomaton::lexmax(const SkState& s) const { return greedy(s, 1); }

std::vector<Word> enumerate_sk_words(int k, int n, std::size_t budget) {
  if (n < 0) throw DomainError("enumerate_sk_words: negative length");
  SkAutomaton a(k);
  std::vector<Word> out;
  Word cur;
  std::size_t visited = 0;
  auto rec = [&](auto&& self, const SkState& s) -> void {
    if (++visited > budget) throw ResourceError("enumerate_sk_words: budget exceeded");
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (Digit d : {Digit{0}, Digit{1}}) {
      auto nx = a.step(s, d);
      if (!nx) continue;
      cur.push_back(d);
      self(self, *nx);
      cur.pop_back();
    }
  };
  rec(rec, a.start());
  return out;
}

Interval sk_cylinder_hull(const Enclosure& q, int k, const Word& prefix) {
  SkAutomaton a(k);
  auto s = a.run(a.start(), prefix);
  if (!s) throw DomainError("sk_cylinder_hull: prefix is not an S_k word");
  return {pi_q(a.lexmin(*s).prepend(prefix), q), pi_q(a.lexmax(*s).prepend(prefix), q)};
}

SkGaps gaps_of_sk(const Enclosure& q, int k, int max_delta_len, const Word& prefix,
                  std::size_t budget) {
  SubshiftSk sk(k);
  if (max_delta_len < 0) throw DomainError("gaps_of_sk: negative depth");
  BonacciRoot root = bonacci_root(k, working_precision());
  if (!certainly_less(root.value, q))
    throw PreconditionViolation("gaps_of_sk: q > q_k is not certified");
  SkAutomaton a(k);
  auto s0 = a.run(a.start(), prefix);
  if (!s0) throw DomainError("gaps_of_sk: prefix is not an S_k word");

  const Enclosure left_tail = pi_q(sk.left_tail(), q);
  const Enclosure right_tail = pi_q(sk.right_tail(), q);
  std::vector<Enclosure> pw(static_cast<std::size_t>(std::max<int>(max_delta_len, static_cast<int>(prefix.size())) + 2));
  const Enclosure r = q.reciprocal();
  pw[0] = Enclosure(1L);
  for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * r;

  std::vector<Gap> gaps;
  std::vector<Word> deltas;
  Word cur = prefix;
  std::size_t visited = 0;
  // In-order traversal: left subtree, own gap, right subtree gives gaps sorted
  // by position because pi_q is increasing on S_k for q > q_k.
  auto rec = [&](auto&& self, const SkState& s, const Enclosure& value) -> void {
    if (++visited > budget) throw ResourceError("gaps_of_sk: enumeration budget exceeded");
    const std::size_t n = cur.size();
    if (static_cast<int>(n) > max_delta_len) return;
    auto c0 = a.step(s, 0);
    auto c1 = a.step(s, 1);
    if (c0) {
      cur.push_back(0);
      self(self, *c0, value);
      cur.pop_back();
    }
    if (a.branches(s)) {
      gaps.push_back({value + pw[n] * left_tail, value + pw[n] * right_tail});
      deltas.push_back(cur);
    }
    if (c1) {
      cur.push_back(1);
      self(self, *c1, value + pw[n + 1]);
      cur.pop_back();
    }
  };
  rec(rec, *s0, word_value(prefix, q));

  SkGaps out;
  std::vector<Gap> kept;
  std::vector<Word> kept_deltas;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (!kept.empty() && kept.back().left.overlaps(gaps[i].left) &&
        kept.back().right.overlaps(gaps[i].right)) {
      ++out.collisions;
      continue;
    }
    kept.push_back(std::move(gaps[i]));
    kept_deltas.push_back(std::move(deltas[i]));
  }
  Interval hull = sk_cylinder_hull(q, k, prefix);
  out.set = GapSet(hull.lo, hull.hi, std::move(kept), max_delta_len);
  out.deltas = std::move(kept_deltas);
  return out;
}

}  // namespace betacert
