#include "betacert/sequence.hpp"

#include <algorithm>
#include <cctype>

#include "betacert/errors.hpp"

namespace betacert {

namespace {

void check_digits(const Word& w) {
  for (Digit d : w)
    if (d < -1 || d > 1) throw MalformedInput("digit outside {-1,0,1}");
}

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw MalformedInput("sequence notation: " + what + " at offset " + std::to_string(i) +
                         " in '" + std::string(s) + "'");
  }

  // Returns true when the exponent is infinite.
  bool exponent(std::size_t& count) {
    count = 1;
    skip();
    if (i >= s.size() || s[i] != '^') return false;
    ++i;
    skip();
    if (s.compare(i, 3, "inf") == 0) {
      i += 3;
      return true;
    }
    if (i < s.size() && (s[i] == 'w' || s[i] == 'N')) {
      ++i;
      return true;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected exponent");
    count = std::stoul(std::string(s.substr(start, i - start)));
    return false;
  }

  Word atom() {
    skip();
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '0' || c == '1') {
      ++i;
      return Word{static_cast<Digit>(c - '0')};
    }
    if (c == 'T') {
      ++i;
      return Word{-1};
    }
    if (c == '-') {
      ++i;
      if (i >= s.size() || s[i] != '1') fail("expected 1 after '-'");
      ++i;
      return Word{-1};
    }
    if (c == '(') {
      ++i;
      Word inner;
      for (;;) {
        skip();
        if (i >= s.size()) fail("unclosed group");
        if (s[i] == ')') {
          ++i;
          break;
        }
        Word a = atom();
        std::size_t n;
        if (exponent(n)) fail("infinite exponent inside group");
        inner = concat(inner, repeat(a, n));
      }
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Word repeat(const Word& w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word repeat(Digit d, std::size_t times) { return Word(times, d); }

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word parse_word(std::string_view text) {
  Parser p{text};
  Word out;
  while (!p.done()) {
    Word a = p.atom();
    std::size_t n;
    if (p.exponent(n)) p.fail("infinite exponent in a finite word");
    out = concat(out, repeat(a, n));
  }
  return out;
}

std::string word_digits(const Word& w) {
  std::string s;
  for (Digit d : w) s.push_back(d < 0 ? 'T' : static_cast<char>('0' + d));
  return s;
}

std::string word_to_string(const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::size_t run = j - i;
    std::string d = w[i] < 0 ? "-1" : std::string(1, static_cast<char>('0' + w[i]));
    if (!out.empty()) out.push_back(' ');
    if (run >= 3) {
      out += d + "^" + std::to_string(run);
    } else {
      out += d;
      if (run == 2) out += " " + d;
    }
    i = j;
  }
  return out;
}

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SymbolicSeq::SymbolicSeq(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  check_digits(pre_);
  check_digits(per_);
  canonicalize();
}

SymbolicSeq SymbolicSeq::finite(Word w) { return SymbolicSeq(std::move(w), {}); }

SymbolicSeq SymbolicSeq::periodic(Word v) {
  if (v.empty()) throw MalformedInput("periodic sequence with empty period");
  return SymbolicSeq({}, std::move(v));
}

SymbolicSeq SymbolicSeq::parse(std::string_view text) {
  Parser p{text};
  Word pre;
  Word per;
  bool has_period = false;
  while (!p.done()) {
    if (has_period) p.fail("period must be the last item");
    Word a = p.atom();
    std::size_t n;
    if (p.exponent(n)) {
      if (a.empty()) p.fail("empty period");
      per = a;
      has_period = true;
    } else {
      pre = concat(pre, repeat(a, n));
    }
  }
  return SymbolicSeq(std::move(pre), std::move(per));
}

void SymbolicSeq::canonicalize() {
  if (!per_.empty()) {
    const std::size_t n = per_.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      bool ok = true;
      for (std::size_t j = d; j < n && ok; ++j) ok = per_[j] == per_[j - d];
      if (ok) {
        per_.resize(d);
        break;
      }
    }
    while (!pre_.empty() && pre_.back() == per_.back()) {
      std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
      pre_.pop_back();
    }
    if (per_.size() == 1 && per_[0] == 0) per_.clear();
  }
  if (per_.empty())
    while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
}

Digit SymbolicSeq::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  if (per_.empty()) return 0;
  return per_[(i - pre_.size()) % per_.size()];
}

Word SymbolicSeq::take(std::size_t n) const {
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

SymbolicSeq SymbolicSeq::prepend(const Word& w) const {
  return SymbolicSeq(concat(w, pre_), per_);
}

SymbolicSeq SymbolicSeq::shifted(std::size_t n) const {
  if (n <= pre_.size()) return SymbolicSeq(Word(pre_.begin() + static_cast<std::ptrdiff_t>(n), pre_.end()), per_);
  if (per_.empty()) return SymbolicSeq();
  std::size_t r = (n - pre_.size()) % per_.size();
  Word p(per_.begin() + static_cast<std::ptrdiff_t>(r), per_.end());
  p.insert(p.end(), per_.begin(), per_.begin() + static_cast<std::ptrdiff_t>(r));
  return SymbolicSeq({}, p);
}

std::string SymbolicSeq::to_string() const {
  std::string out = word_to_string(pre_);
  if (!per_.empty()) {
    if (!out.empty()) out.push_back(' ');
    out += "(" + word_to_string(per_) + ")^inf";
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace betacert
