#pragma once

#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace betacert {

inline constexpr int kDefaultPrecision = 256;

// Working precision in bits for newly created enclosures (thread local).
int working_precision();
void set_working_precision(int bits);

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

enum class Tri : std::uint8_t { no, yes, unknown };

const char* to_string(Tri t);

// Closed interval [lo, hi] with MPFR endpoints.  Every operation rounds the
// lower endpoint down and the upper endpoint up, so the exact result of the
// operation on any points of the operands lies inside the result.
class Enclosure {
 public:
  Enclosure();
  explicit Enclosure(long value);
  Enclosure(const Enclosure& other);
  Enclosure(Enclosure&& other) noexcept;
  Enclosure& operator=(const Enclosure& other);
  Enclosure& operator=(Enclosure&& other) noexcept;
  ~Enclosure();

  static Enclosure rational(long num, long den);
  // Decimal ("1.25", "-3e-8") or rational ("7/4") text.
  static Enclosure parse(std::string_view text);
  static Enclosure from_bounds(mpfr_srcptr lo, mpfr_srcptr hi);
  static Enclosure from_double(double v);
  static Enclosure hull(const Enclosure& a, const Enclosure& b);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  int precision() const;

  double lo_double() const;   // rounded down
  double hi_double() const;   // rounded up
  double mid_double() const;
  // Upper bound on hi - lo.
  double width_double() const;
  Enclosure width() const;
  Enclosure mid() const;      // point enclosure near the centre

  bool is_point() const;
  bool contains(const Enclosure& other) const;
  bool contains(long v) const;
  bool contains_zero() const;
  bool overlaps(const Enclosure& other) const;
  bool certainly_positive() const;
  bool certainly_negative() const;

  Enclosure intersect(const Enclosure& other) const;
  Enclosure abs() const;
  Enclosure pow(long n) const;
  Enclosure reciprocal() const;
  Enclosure log() const;
  Enclosure exp() const;
  // x^e for x > 0.
  Enclosure pow(const Enclosure& e) const;
  Enclosure sqr() const { return pow(2); }
  // Largest representable bounds keeping the value inside [a, b].
  Enclosure clamp(const Enclosure& a, const Enclosure& b) const;

  // Directed decimal renderings with `digits` significant digits.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  std::string to_string(int digits = 20) const;

  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);
  Enclosure& operator/=(const Enclosure& o);

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator-(const Enclosure& a);
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

 private:
  struct Uninit {};
  explicit Enclosure(Uninit);
  mpfr_t lo_;
  mpfr_t hi_;
};

Enclosure operator+(const Enclosure& a, long b);
Enclosure operator+(long a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, long b);
Enclosure operator-(long a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, long b);
Enclosure operator*(long a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, long b);
Enclosure operator/(long a, const Enclosure& b);

Enclosure min(const Enclosure& a, const Enclosure& b);
Enclosure max(const Enclosure& a, const Enclosure& b);

// a < b, a <= b
Tri less(const Enclosure& a, const Enclosure& b);
Tri less_equal(const Enclosure& a, const Enclosure& b);
inline bool certainly_less(const Enclosure& a, const Enclosure& b) {
  return less(a, b) == Tri::yes;
}
inline bool certainly_less_equal(const Enclosure& a, const Enclosure& b) {
  return less_equal(a, b) == Tri::yes;
}

// Order used for sorting: by lower endpoint, then upper endpoint.
int compare_lo(const Enclosure& a, const Enclosure& b);
int compare_hi(const Enclosure& a, const Enclosure& b);

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

// Render an MPFR value with directed rounding, e.g. "1.2621775e-29".
std::string format_mpfr(mpfr_srcptr v, int digits, mpfr_rnd_t rnd);

}  // namespace betacert
