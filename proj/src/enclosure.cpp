#include "betacert/enclosure.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "betacert/errors.hpp"

namespace betacert {

namespace {

thread_local int g_precision = kDefaultPrecision;

int prec_of(int bits) { return std::clamp(bits, 16, 1 << 20); }

bool parse_rational(std::string_view text, mpq_t out) {
  std::string s(text);
  if (s.empty()) return false;
  if (mpq_set_str(out, s.c_str(), 10) != 0) return false;
  if (mpz_sgn(mpq_denref(out)) == 0) return false;
  mpq_canonicalize(out);
  return true;
}

// Parse a plain decimal such as "-1.25e-3" into an exact rational.
bool parse_decimal(std::string_view text, mpq_t out) {
  std::string s(text);
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long exp10 = 0;
  bool any = false;
  bool dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any = true;
      if (dot) --exp10;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) return false;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return false;
    ++i;
    std::string e = s.substr(i);
    if (e.empty()) return false;
    std::size_t used = 0;
    long ev = 0;
    try {
      ev = std::stol(e, &used);
    } catch (...) {
      return false;
    }
    if (used != e.size()) return false;
    exp10 += ev;
  }
  mpz_t num, pw;
  mpz_init_set_str(num, digits.c_str(), 10);
  mpz_init(pw);
  mpz_ui_pow_ui(pw, 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0) {
    mpz_mul(num, num, pw);
    mpq_set_z(out, num);
  } else {
    mpq_set_num(out, num);
    mpq_set_den(out, pw);
    mpq_canonicalize(out);
  }
  if (neg) mpq_neg(out, out);
  mpz_clear(num);
  mpz_clear(pw);
  return true;
}

}  // namespace

int working_precision() { return g_precision; }
void set_working_precision(int bits) { g_precision = prec_of(bits); }

PrecisionScope::PrecisionScope(int bits) : saved_(g_precision) {
  g_precision = prec_of(bits);
}
PrecisionScope::~PrecisionScope() { g_precision = saved_; }

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    default:
      return "unknown";
  }
}

Enclosure::Enclosure(Uninit) {
  mpfr_init2(lo_, g_precision);
  mpfr_init2(hi_, g_precision);
}

Enclosure::Enclosure() : Enclosure(Uninit{}) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(long value) : Enclosure(Uninit{}) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Enclosure::Enclosure(const Enclosure& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& other) noexcept : Enclosure(other) {}

Enclosure& Enclosure::operator=(const Enclosure& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
  mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }
  return *this;
}

Enclosure::~Enclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Enclosure Enclosure::rational(long num, long den) {
  if (den == 0) throw DomainError("rational: zero denominator");
  mpq_t q;
  mpq_init(q);
  mpq_set_si(q, num, den < 0 ? static_cast<unsigned long>(-den) : static_cast<unsigned long>(den));
  if (den < 0) mpq_neg(q, q);
  mpq_canonicalize(q);
  Enclosure r{Uninit{}};
  mpfr_set_q(r.lo_, q, MPFR_RNDD);
  mpfr_set_q(r.hi_, q, MPFR_RNDU);
  mpq_clear(q);
  return r;
}

Enclosure Enclosure::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  mpq_t q;
  mpq_init(q);
  bool ok = text.find('/') != std::string_view::npos ? parse_rational(text, q)
                                                     : parse_decimal(text, q);
  if (!ok) {
    mpq_clear(q);
    throw MalformedInput("cannot parse number: '" + std::string(text) + "'");
  }
  Enclosure r{Uninit{}};
  mpfr_set_q(r.lo_, q, MPFR_RNDD);
  mpfr_set_q(r.hi_, q, MPFR_RNDU);
  mpq_clear(q);
  return r;
}

Enclosure Enclosure::from_bounds(mpfr_srcptr lo, mpfr_srcptr hi) {
  if (mpfr_nan_p(lo) || mpfr_nan_p(hi) || mpfr_cmp(lo, hi) > 0)
    throw InconsistencyError("from_bounds: invalid interval");
  Enclosure r{Uninit{}};
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("from_double: non-finite value");
  Enclosure r{Uninit{}};
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  Enclosure r{Uninit{}};
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

int Enclosure::precision() const { return static_cast<int>(mpfr_get_prec(lo_)); }

double Enclosure::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::mid_double() const {
  Enclosure m = mid();
  return mpfr_get_d(m.lo_, MPFR_RNDN);
}

double Enclosure::width_double() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

Enclosure Enclosure::width() const {
  Enclosure r{Uninit{}};
  mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::mid() const {
  Enclosure r{Uninit{}};
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

bool Enclosure::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool Enclosure::contains(const Enclosure& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_lessequal_p(o.hi_, hi_);
}

bool Enclosure::contains(long v) const {
  return mpfr_cmp_si(lo_, v) <= 0 && mpfr_cmp_si(hi_, v) >= 0;
}

bool Enclosure::contains_zero() const { return contains(0L); }

bool Enclosure::overlaps(const Enclosure& o) const {
  return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
}

bool Enclosure::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Enclosure::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

Enclosure Enclosure::intersect(const Enclosure& o) const {
  if (!overlaps(o)) throw InconsistencyError("intersect: disjoint enclosures");
  Enclosure r{Uninit{}};
  mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::clamp(const Enclosure& a, const Enclosure& b) const {
  Enclosure r(*this);
  if (mpfr_less_p(r.lo_, a.lo_)) mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
  if (mpfr_greater_p(r.hi_, b.hi_)) mpfr_set(r.hi_, b.hi_, MPFR_RNDU);
  if (mpfr_greater_p(r.lo_, r.hi_)) throw InconsistencyError("clamp: empty result");
  return r;
}

Enclosure Enclosure::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  Enclosure r{Uninit{}};
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::pow(long n) const {
  if (n == 0) return Enclosure(1L);
  if (n == 1) return *this;
  Enclosure r{Uninit{}};
  if (mpfr_sgn(lo_) > 0) {
    if (n > 0) {
      mpfr_pow_ui(r.lo_, lo_, static_cast<unsigned long>(n), MPFR_RNDD);
      mpfr_pow_ui(r.hi_, hi_, static_cast<unsigned long>(n), MPFR_RNDU);
    } else {
      mpfr_pow_si(r.lo_, hi_, n, MPFR_RNDD);
      mpfr_pow_si(r.hi_, lo_, n, MPFR_RNDU);
    }
    return r;
  }
  if (n < 0) {
    if (contains_zero()) throw DomainError("pow: negative exponent of an enclosure containing 0");
    return reciprocal().pow(-n);
  }
  if (mpfr_sgn(hi_) < 0) {
    Enclosure p = (-*this).pow(n);
    return (n % 2 == 0) ? p : -p;
  }
  // Mixed sign base.
  mpfr_t m;
  mpfr_init2(m, mpfr_get_prec(lo_));
  mpfr_neg(m, lo_, MPFR_RNDU);
  mpfr_t up_hi, up_lo;
  mpfr_init2(up_hi, g_precision);
  mpfr_init2(up_lo, g_precision);
  mpfr_pow_ui(up_hi, hi_, static_cast<unsigned long>(n), MPFR_RNDU);
  mpfr_pow_ui(up_lo, m, static_cast<unsigned long>(n), MPFR_RNDU);
  if (n % 2 == 0) {
    mpfr_set_zero(r.lo_, 1);
    mpfr_max(r.hi_, up_hi, up_lo, MPFR_RNDU);
  } else {
    mpfr_neg(r.lo_, up_lo, MPFR_RNDD);
    mpfr_set(r.hi_, up_hi, MPFR_RNDU);
  }
  mpfr_clears(m, up_hi, up_lo, static_cast<mpfr_ptr>(nullptr));
  return r;
}

Enclosure Enclosure::reciprocal() const { return Enclosure(1L) / *this; }

Enclosure Enclosure::log() const {
  if (mpfr_sgn(lo_) <= 0) throw DomainError("log: enclosure not certainly positive");
  Enclosure r{Uninit{}};
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::exp() const {
  Enclosure r{Uninit{}};
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Enclosure Enclosure::pow(const Enclosure& e) const {
  if (e.is_point() && mpfr_integer_p(e.lo_) && mpfr_fits_slong_p(e.lo_, MPFR_RNDN))
    return pow(mpfr_get_si(e.lo_, MPFR_RNDN));
  return (e * log()).exp();
}

std::string format_mpfr(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(v)) return "0";
  if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(v)) return "nan";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v, rnd);
  std::string raw(s);
  mpfr_free_str(s);
  std::string sign;
  if (!raw.empty() && raw[0] == '-') {
    sign = "-";
    raw.erase(0, 1);
  }
  // raw = d1 d2 ... dn meaning 0.d1d2...dn * 10^e
  std::string mant = raw.substr(0, 1);
  std::string rest = raw.substr(1);
  while (!rest.empty() && rest.back() == '0') rest.pop_back();
  if (!rest.empty()) mant += "." + rest;
  long exp10 = static_cast<long>(e) - 1;
  if (exp10 == 0) return sign + mant;
  return sign + mant + "e" + std::to_string(exp10);
}

std::string Enclosure::lo_string(int digits) const { return format_mpfr(lo_, digits, MPFR_RNDD); }
std::string Enclosure::hi_string(int digits) const { return format_mpfr(hi_, digits, MPFR_RNDU); }

std::string Enclosure::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Enclosure& Enclosure::operator+=(const Enclosure& o) { return *this = *this + o; }
Enclosure& Enclosure::operator-=(const Enclosure& o) { return *this = *this - o; }
Enclosure& Enclosure::operator*=(const Enclosure& o) { return *this = *this * o; }
Enclosure& Enclosure::operator/=(const Enclosure& o) { return *this = *this / o; }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
  Enclosure r{Enclosure::Uninit{}};
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
  Enclosure r{Enclosure::Uninit{}};
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator-(const Enclosure& a) {
  Enclosure r{Enclosure::Uninit{}};
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  Enclosure r{Enclosure::Uninit{}};
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
  }
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  mpfr_t t;
  mpfr_init2(t, working_precision());
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains_zero()) throw DomainError("division by an enclosure containing 0");
  Enclosure r{Enclosure::Uninit{}};
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  mpfr_t t;
  mpfr_init2(t, working_precision());
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Enclosure operator+(const Enclosure& a, long b) { return a + Enclosure(b); }
Enclosure operator+(long a, const Enclosure& b) { return Enclosure(a) + b; }
Enclosure operator-(const Enclosure& a, long b) { return a - Enclosure(b); }
Enclosure operator-(long a, const Enclosure& b) { return Enclosure(a) - b; }
Enclosure operator*(const Enclosure& a, long b) { return a * Enclosure(b); }
Enclosure operator*(long a, const Enclosure& b) { return Enclosure(a) * b; }
Enclosure operator/(const Enclosure& a, long b) { return a / Enclosure(b); }
Enclosure operator/(long a, const Enclosure& b) { return Enclosure(a) / b; }

Enclosure min(const Enclosure& a, const Enclosure& b) {
  Enclosure r(a);
  mpfr_t lo, hi;
  mpfr_init2(lo, working_precision());
  mpfr_init2(hi, working_precision());
  mpfr_min(lo, a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(hi, a.hi(), b.hi(), MPFR_RNDU);
  r = Enclosure::from_bounds(lo, hi);
  mpfr_clears(lo, hi, static_cast<mpfr_ptr>(nullptr));
  return r;
}

Enclosure max(const Enclosure& a, const Enclosure& b) { return -min(-a, -b); }

Tri less(const Enclosure& a, const Enclosure& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return Tri::yes;
  if (mpfr_greaterequal_p(a.lo(), b.hi())) return Tri::no;
  return Tri::unknown;
}

Tri less_equal(const Enclosure& a, const Enclosure& b) {
  if (mpfr_lessequal_p(a.hi(), b.lo())) return Tri::yes;
  if (mpfr_greater_p(a.lo(), b.hi())) return Tri::no;
  return Tri::unknown;
}

int compare_lo(const Enclosure& a, const Enclosure& b) {
  int c = mpfr_cmp(a.lo(), b.lo());
  if (c != 0) return c;
  return mpfr_cmp(a.hi(), b.hi());
}

int compare_hi(const Enclosure& a, const Enclosure& b) {
  int c = mpfr_cmp(a.hi(), b.hi());
  if (c != 0) return c;
  return mpfr_cmp(a.lo(), b.lo());
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) { return os << e.to_string(); }

}  // namespace betacert
