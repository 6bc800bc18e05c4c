#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace betacert {

using Digit = std::int8_t;
using Word = std::vector<Digit>;

Word repeat(const Word& w, std::size_t times);
Word repeat(Digit d, std::size_t times);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> parts);

// Compact notation: "1^9 0 1^10", digits 0, 1, -1, groups "(01)^3".
Word parse_word(std::string_view text);
std::string word_to_string(const Word& w);
// Plain digit string, "0110"; -1 is written as 'T'.
std::string word_digits(const Word& w);

bool lex_less(const Word& a, const Word& b);

// Finite word (implicitly followed by 0^inf) or u v^inf, always stored in
// canonical form: primitive period, shortest preperiod, a period of 0 is
// folded into the finite representation and trailing zeros are dropped.
class SymbolicSeq {
 public:
  SymbolicSeq() = default;
  SymbolicSeq(Word preperiod, Word period);

  static SymbolicSeq finite(Word w);
  static SymbolicSeq periodic(Word v);
  // Notation of parse_word with an optional final "(...)^inf" (also "^w").
  static SymbolicSeq parse(std::string_view text);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }
  bool is_finite() const { return per_.empty(); }
  bool is_zero() const { return pre_.empty() && per_.empty(); }

  Digit at(std::size_t i) const;
  Word take(std::size_t n) const;
  SymbolicSeq prepend(const Word& w) const;
  SymbolicSeq shifted(std::size_t n) const;

  std::string to_string() const;

  friend bool operator==(const SymbolicSeq& a, const SymbolicSeq& b) {
    return a.pre_ == b.pre_ && a.per_ == b.per_;
  }

 private:
  void canonicalize();
  Word pre_;
  Word per_;
};

}  // namespace betacert
