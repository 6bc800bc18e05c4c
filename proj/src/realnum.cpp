#include "betacert/realnum.hpp"

#include <cstdlib>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "betacert/errors.hpp"

namespace betacert {

Enclosure bonacci_poly(const Enclosure& x, int k) {
  // x^k (x - 2) + 1
  return x.pow(k) * (x - 2) + 1;
}

namespace {

std::mutex g_root_mutex;
std::map<std::pair<int, int>, Enclosure>& root_cache() {
  static std::map<std::pair<int, int>, Enclosure> cache;
  return cache;
}

// Sign of the polynomial at an exact dyadic point, raising the evaluation
// precision until the sign is resolved.
int poly_sign_at(mpfr_srcptr x, int k, int base_bits) {
  for (int bits = base_bits + 64; bits <= base_bits * 16 + 4096; bits *= 2) {
    PrecisionScope scope(bits);
    Enclosure e = Enclosure::from_bounds(x, x);
    Enclosure p = bonacci_poly(e, k);
    if (p.certainly_positive()) return 1;
    if (p.certainly_negative()) return -1;
  }
  return 0;  // x is (numerically) the root itself
}

}  // namespace

BonacciRoot bonacci_root(int k, int precision_bits) {
  if (k < 2) throw DomainError("bonacci_root: k must be at least 2");
  if (precision_bits < 16) throw DomainError("bonacci_root: precision too small");
  {
    std::lock_guard<std::mutex> lock(g_root_mutex);
    auto it = root_cache().find({k, precision_bits});
    if (it != root_cache().end()) return {k, it->second};
  }
  const int bits = precision_bits + 8;
  mpfr_t a, b, m, w;
  mpfr_inits2(bits + 8, a, b, m, w, static_cast<mpfr_ptr>(nullptr));
  // p(3/2) < 0 < p(2) = 1 for every k >= 2, and 3/2 < q_2 <= q_k < 2.
  mpfr_set_d(a, 1.5, MPFR_RNDN);
  mpfr_set_ui(b, 2, MPFR_RNDN);
  Enclosure result;
  for (;;) {
    mpfr_sub(w, b, a, MPFR_RNDU);
    if (mpfr_cmp_si_2exp(w, 1, -precision_bits) <= 0) break;
    mpfr_add(m, a, b, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    int s = poly_sign_at(m, k, bits);
    if (s == 0) {
      mpfr_set(a, m, MPFR_RNDN);
      mpfr_set(b, m, MPFR_RNDN);
      break;
    }
    if (s < 0)
      mpfr_set(a, m, MPFR_RNDN);
    else
      mpfr_set(b, m, MPFR_RNDN);
  }
  {
    PrecisionScope scope(bits + 8);
    result = Enclosure::from_bounds(a, b);
  }
  mpfr_clears(a, b, m, w, static_cast<mpfr_ptr>(nullptr));
  std::lock_guard<std::mutex> lock(g_root_mutex);
  root_cache().emplace(std::make_pair(k, precision_bits), result);
  return {k, result};
}

void require_base(const Enclosure& q, const char* who) {
  if (!certainly_less(Enclosure(1L), q) || !certainly_less_equal(q, Enclosure(2L)))
    throw DomainError(std::string(who) + ": base must lie in (1,2], got " + q.to_string(12));
}

Enclosure iq_right(const Enclosure& q) { return Enclosure(1L) / (q - 1); }

Enclosure word_value(const Word& w, const Enclosure& q) {
  if (w.empty()) return Enclosure();
  Enclosure r = q.reciprocal();
  Enclosure acc;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it != 0) acc = acc + Enclosure(static_cast<long>(*it));
    acc = acc * r;
  }
  return acc;
}

Enclosure pi_q(const SymbolicSeq& seq, const Enclosure& q) {
  require_base(q, "pi_q");
  Enclosure head = word_value(seq.preperiod(), q);
  if (seq.is_finite()) return head;
  const Word& v = seq.period();
  Enclosure tail = word_value(v, q) / (1 - q.pow(-static_cast<long>(v.size())));
  Enclosure out = head + q.pow(-static_cast<long>(seq.preperiod().size())) * tail;
  Enclosure bound = iq_right(q);
  return out.clamp(-bound, bound);
}

ProjectionGap projection_gap(const Enclosure& q1, const Enclosure& q2, const SymbolicSeq& seq) {
  require_base(q1, "projection_gap");
  require_base(q2, "projection_gap");
  ProjectionGap g;
  g.difference = (pi_q(seq, q1) - pi_q(seq, q2)).abs();
  g.bound = (q1 - q2).abs() / ((q1 - 1) * (q2 - 1));
  g.within_bound = less_equal(g.difference, g.bound);
  return g;
}

Enclosure Base::current() const {
  if (root_of <= 0) {
    // Re-read exact text so a raised precision also narrows q.
    if (!text.empty() && value.precision() < working_precision()) {
      try {
        return Enclosure::parse(text);
      } catch (const MalformedInput&) {
      }
    }
    return value;
  }
  Enclosure r = bonacci_root(root_of, working_precision()).value;
  if (scale_exp > 0) return r + Enclosure::rational(scale_num, scale_den) * r.pow(-static_cast<long>(scale_exp));
  return has_offset ? r + offset : r;
}

Base Base::generic(Enclosure q, std::string text) {
  Base b;
  b.value = std::move(q);
  b.text = std::move(text);
  return b;
}

Base Base::root(int k) {
  Base b;
  b.root_of = k;
  b.value = bonacci_root(k, working_precision()).value;
  b.text = "qk:" + std::to_string(k);
  return b;
}

Base Base::root_offset(int k, Enclosure offset) {
  Base b;
  b.root_of = k;
  b.has_offset = true;
  b.offset = std::move(offset);
  b.value = bonacci_root(k, working_precision()).value + b.offset;
  b.text = "qk:" + std::to_string(k) + "+" + b.offset.to_string(12);
  return b;
}

Base Base::root_scaled(int k, long num, long den, int exp) {
  if (den <= 0 || exp <= 0) throw DomainError("Base::root_scaled: need den > 0 and exp > 0");
  const Enclosure r = bonacci_root(k, working_precision()).value;
  Base b = root_offset(k, Enclosure::rational(num, den) * r.pow(-static_cast<long>(exp)));
  b.scale_num = num;
  b.scale_den = den;
  b.scale_exp = exp;
  b.text = "qk:" + std::to_string(k) + (num < 0 ? "-" : "+") + (std::labs(num) == den ? "" : std::to_string(std::labs(num)) + "/" + std::to_string(den) + "*") +
           "qk^-" + std::to_string(exp);
  return b;
}

Base parse_base(std::string_view text) {
  std::string t(text);
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  };
  t = trim(t);
  if (t.empty()) throw MalformedInput("empty base");
  if (t == "golden" || t == "G") {
    Base b = Base::root(2);
    b.text = t;
    return b;
  }
  if (t.rfind("qk:", 0) == 0) {
    std::string rest = t.substr(3);
    std::size_t pos = 0;
    while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) ++pos;
    if (pos == 0) throw MalformedInput("base: expected qk:<k>");
    int k = std::stoi(rest.substr(0, pos));
    if (k < 2 || k > 100000) throw DomainError("base: k out of range");
    std::string off = trim(rest.substr(pos));
    if (off.empty()) {
      Base b = Base::root(k);
      b.text = t;
      return b;
    }
    if (off[0] != '+' && off[0] != '-') throw MalformedInput("base: bad offset in " + t);
    // Exact offsets [n[/d]*]qk^-E, as printed by root_scaled.
    if (const std::size_t at = off.find("qk^-"); at != std::string::npos) {
      std::string coef = trim(off.substr(1, at - 1));
      if (!coef.empty()) {
        if (coef.back() != '*') throw MalformedInput("base: bad offset in " + t);
        coef.pop_back();
      }
      long num = 1, den = 1;
      try {
        if (!coef.empty()) {
          const std::size_t slash = coef.find('/');
          std::size_t used = 0;
          num = std::stol(coef.substr(0, slash), &used);
          if (used != coef.substr(0, slash).size()) throw MalformedInput("base: bad offset in " + t);
          if (slash != std::string::npos) {
            den = std::stol(coef.substr(slash + 1), &used);
            if (used != coef.size() - slash - 1) throw MalformedInput("base: bad offset in " + t);
          }
        }
        std::size_t used = 0;
        const std::string e = off.substr(at + 4);
        const int exp = std::stoi(e, &used);
        if (used != e.size() || num < 0 || den <= 0 || exp <= 0) throw MalformedInput("base: bad offset in " + t);
        return Base::root_scaled(k, off[0] == '-' ? -num : num, den, exp);
      } catch (const std::logic_error&) {
        throw MalformedInput("base: bad offset in " + t);
      }
    }
    Enclosure d = Enclosure::parse(trim(off.substr(1)));
    if (off[0] == '-') d = -d;
    Base b = Base::root_offset(k, d);
    b.text = t;
    return b;
  }
  Base b = Base::generic(Enclosure::parse(t), t);
  return b;
}

}  // namespace betacert
