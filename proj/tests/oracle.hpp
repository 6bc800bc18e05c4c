#pragma once

// Exact rational reference computations used by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "betacert/enclosure.hpp"
#include "betacert/gapset.hpp"
#include "betacert/sequence.hpp"

namespace oracle {

inline bool encloses(const betacert::Enclosure& e, const mpq_class& v) {
  return mpfr_cmp_q(e.lo(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(e.hi(), v.get_mpq_t()) >= 0;
}

inline betacert::Enclosure to_enclosure(const mpq_class& v) {
  return betacert::Enclosure::parse(v.get_str());
}

inline mpq_class power(const mpq_class& q, long n) {
  mpq_class r = 1;
  const mpq_class b = n < 0 ? mpq_class(1 / q) : q;
  for (long i = 0; i < std::labs(n); ++i) r *= b;
  return r;
}

// sum w_j q^-j
inline mpq_class word_value(const betacert::Word& w, const mpq_class& q) {
  mpq_class r = 0;
  mpq_class p = 1;
  for (betacert::Digit d : w) {
    p /= q;
    r += p * static_cast<long>(d);
  }
  return r;
}

inline mpq_class seq_value(const betacert::SymbolicSeq& s, const mpq_class& q) {
  mpq_class r = word_value(s.preperiod(), q);
  if (s.period().empty()) return r;
  const long u = static_cast<long>(s.preperiod().size());
  const long v = static_cast<long>(s.period().size());
  const mpq_class per = word_value(s.period(), q) / (1 - power(q, -v));
  return r + power(q, -u) * per;
}

// Number of 0/1 words of length n that start some base-q expansion of x:
// those whose remainder q^n (x - sum) lies in [0, 1/(q-1)].
inline std::size_t prefix_count(const mpq_class& q, const mpq_class& x, int n) {
  const mpq_class top = 1 / (q - 1);
  std::size_t count = 0;
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t bits = 0; bits < total; ++bits) {
    mpq_class y = x;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      y = q * y - static_cast<long>((bits >> (n - 1 - j)) & 1U);
      ok = y >= 0 && y <= top;
    }
    if (ok) ++count;
  }
  return count;
}

struct RationalGapSet {
  mpq_class lo, hi;
  std::vector<std::pair<mpq_class, mpq_class>> gaps;  // sorted, disjoint, inside (lo, hi)
};

// Newhouse thickness: the bridge of a gap on each side reaches to the nearest
// gap at least as long, or to the hull.  nullopt for a set with no gaps.
inline std::optional<mpq_class> thickness(const RationalGapSet& s) {
  if (s.gaps.empty()) return std::nullopt;
  std::optional<mpq_class> best;
  const std::size_t n = s.gaps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const mpq_class len = s.gaps[i].second - s.gaps[i].first;
    auto at_least = [&](std::size_t j) {
      return s.gaps[j].second - s.gaps[j].first >= len;
    };
    mpq_class left_end = s.lo;
    for (std::size_t j = i; j-- > 0;)
      if (at_least(j)) {
        left_end = s.gaps[j].second;
        break;
      }
    mpq_class right_end = s.hi;
    for (std::size_t j = i + 1; j < n; ++j)
      if (at_least(j)) {
        right_end = s.gaps[j].first;
        break;
      }
    const mpq_class left = s.gaps[i].first - left_end;
    const mpq_class right = right_end - s.gaps[i].second;
    const mpq_class t = std::min(left, right) / len;
    if (!best || t < *best) best = t;
  }
  return best;
}

inline betacert::GapSet to_gapset(const RationalGapSet& s) {
  std::vector<betacert::Gap> g;
  for (const auto& [a, b] : s.gaps) g.push_back({to_enclosure(a), to_enclosure(b)});
  return betacert::GapSet(to_enclosure(s.lo), to_enclosure(s.hi), std::move(g));
}

}  // namespace oracle
