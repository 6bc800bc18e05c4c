#include <doctest.h>

#include "betacert/errors.hpp"
#include "betacert/sequence.hpp"

using namespace betacert;

TEST_CASE("word notation") {
  CHECK(parse_word("1^3 0 (01)^2") == Word{1, 1, 1, 0, 0, 1, 0, 1});
  CHECK(parse_word("-1 0 1") == Word{-1, 0, 1});
  CHECK(word_to_string(Word{1, 1, 1, 1, 0, 1, 1}) == "1^4 0 1 1");
  CHECK(word_digits(Word{-1, 0, 1}) == "T01");
  CHECK_THROWS_AS(parse_word("(01)^inf"), MalformedInput);
  CHECK_THROWS_AS(parse_word("2"), MalformedInput);
}

TEST_CASE("sequences are stored in canonical form") {
  SUBCASE("period is made primitive") {
    CHECK(SymbolicSeq::periodic(Word{0, 1, 0, 1}) == SymbolicSeq::periodic(Word{0, 1}));
  }
  SUBCASE("preperiod is folded into the period") {
    const SymbolicSeq a = SymbolicSeq::parse("0 1 (01)^inf");
    CHECK(a.preperiod().empty());
    CHECK(a.period() == Word{0, 1});
    CHECK(SymbolicSeq::parse("1 (01)^inf") == SymbolicSeq::parse("(10)^inf"));
  }
  SUBCASE("zero tails are dropped") {
    const SymbolicSeq z = SymbolicSeq::parse("1 1 0 0 (0)^inf");
    CHECK(z.is_finite());
    CHECK(z.preperiod() == Word{1, 1});
    CHECK(SymbolicSeq::finite(Word{0, 0}).is_zero());
  }
}

TEST_CASE("sequence access") {
  const SymbolicSeq s = SymbolicSeq::parse("1 1 (100)^inf");
  CHECK(s.take(8) == Word{1, 1, 1, 0, 0, 1, 0, 0});
  CHECK(s.at(5) == 1);
  CHECK(s.shifted(2) == SymbolicSeq::parse("(100)^inf"));
  CHECK(s.shifted(2).prepend(Word{1, 1}) == s);
  CHECK(SymbolicSeq::parse(s.to_string()) == s);
  CHECK(SymbolicSeq::finite(Word{1}).at(7) == 0);
}
