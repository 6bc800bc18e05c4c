#include <doctest.h>

#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"
#include "betacert/symbolic.hpp"
#include "oracle.hpp"

using namespace betacert;

namespace {

bool brute_avoids(const Word& w, int k) {
  return word_avoids(w, concat(Word{0}, repeat(Digit{1}, static_cast<std::size_t>(k)))) &&
         word_avoids(w, concat(Word{1}, repeat(Digit{0}, static_cast<std::size_t>(k))));
}

Word bits(unsigned v, int n) {
  Word w;
  for (int j = n - 1; j >= 0; --j) w.push_back(static_cast<Digit>((v >> j) & 1U));
  return w;
}

}  // namespace

TEST_CASE("pattern avoidance") {
  CHECK(word_avoids(Word{0, 1, 1, 0}, Word{0, 1, 1, 1}));
  CHECK(!word_avoids(Word{0, 1, 1, 1}, Word{0, 1, 1, 1}));
  const SubshiftSk s3(3);
  CHECK(s3.contains(SymbolicSeq::parse("(0110)^inf")));
  CHECK(!s3.contains(SymbolicSeq::parse("(01110)^inf")));
  // A leading run of any length is allowed.
  CHECK(s3.contains(SymbolicSeq::parse("1^6 (010)^inf")));
  CHECK(s3.contains(s3.left_tail()));
  CHECK(s3.contains(s3.right_tail()));
}

TEST_CASE("automaton words agree with brute force") {
  for (int k = 2; k <= 5; ++k) {
    for (int n = 0; n <= 12; ++n) {
      std::vector<Word> expected;
      for (unsigned v = 0; v < (1U << n); ++v) {
        Word w = bits(v, n);
        if (brute_avoids(w, k)) expected.push_back(w);
      }
      CHECK(enumerate_sk_words(k, n) == expected);
    }
  }
  CHECK_THROWS_AS(enumerate_sk_words(3, 30, 100), ResourceError);
}

TEST_CASE("gaps of pi_q(S_k) against exact values") {
  const int k = 4;
  const mpq_class q(39, 20);  // above q_4
  const Enclosure qe = oracle::to_enclosure(q);
  REQUIRE(certainly_less(bonacci_root(k).value, qe));
  const SkGaps g = gaps_of_sk(qe, k, 7);
  REQUIRE(g.set.size() == g.deltas.size());
  const SubshiftSk sk(k);
  for (std::size_t i = 0; i < g.set.size(); ++i) {
    const Gap& gap = g.set.gaps()[i];
    CHECK(oracle::encloses(gap.left, oracle::seq_value(sk.left_tail().prepend(g.deltas[i]), q)));
    CHECK(oracle::encloses(gap.right, oracle::seq_value(sk.right_tail().prepend(g.deltas[i]), q)));
    if (i > 0) CHECK(certainly_less(g.set.gaps()[i - 1].right, gap.left));
  }
  SUBCASE("no point of S_k lies inside a gap") {
    // w (01)^inf lies in S_k for k >= 2 whenever w 0 1 0 1 avoids both patterns.
    for (unsigned v = 0; v < (1U << 11); ++v) {
      const Word w = bits(v, 11);
      if (!brute_avoids(concat(w, Word{0, 1, 0, 1, 0, 1}), k)) continue;
      const mpq_class x = oracle::seq_value(SymbolicSeq(w, Word{0, 1}), q);
      for (const Gap& gap : g.set.gaps()) {
        const bool inside = mpfr_cmp_q(gap.left.hi(), x.get_mpq_t()) < 0 && mpfr_cmp_q(gap.right.lo(), x.get_mpq_t()) > 0;
        CHECK_FALSE(inside);
      }
    }
  }
  SUBCASE("hull is the convex hull of S_k") {
    CHECK(oracle::encloses(g.set.lo(), 0));
    CHECK(oracle::encloses(g.set.hi(), 1 / (q - 1)));
  }
}

TEST_CASE("gap enumeration preconditions") {
  CHECK_THROWS_AS(gaps_of_sk(Enclosure::parse("1.8"), 4, 5), PreconditionViolation);
  CHECK_THROWS_AS(gaps_of_sk(Enclosure::parse("1.99"), 4, 5, Word{0, 1, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(gaps_of_sk(Enclosure::parse("1.99"), 4, 30, {}, 1000), ResourceError);
}

TEST_CASE("cylinder hulls nest") {
  const Enclosure q = Enclosure::parse("1.97");
  const Interval whole = sk_cylinder_hull(q, 4, {});
  const Interval c0 = sk_cylinder_hull(q, 4, Word{0});
  const Interval c01 = sk_cylinder_hull(q, 4, Word{0, 1});
  CHECK(certainly_less_equal(whole.lo, c0.lo));
  CHECK(certainly_less_equal(c0.lo, c01.lo));
  // Both maxima are 0 (1111 0)^inf.
  CHECK(c01.hi.overlaps(c0.hi));
  CHECK(certainly_less(c01.lo, c01.hi));
}
