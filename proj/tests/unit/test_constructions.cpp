#include <doctest.h>

#include "betacert/constructions.hpp"
#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"
#include "betacert/symbolic.hpp"

using namespace betacert;

TEST_CASE("g acts as the prefix map 1^(k-1) 0") {
  const int k = 9;
  const Enclosure q = bonacci_root(k).value + Enclosure::rational(1, 1000000);
  const GMap g = GMap::make(q, k);
  for (const char* text : {"(01)^inf", "1 1 0 (100)^inf", "0", "(1^8 0)^inf"}) {
    const SymbolicSeq s = SymbolicSeq::parse(text);
    for (int it = 1; it <= 3; ++it) CHECK(g.apply(pi_q(s, q), it).overlaps(pi_q(g.apply(s, it), q)));
  }
  CHECK(g.apply(g.fixed_point).overlaps(g.fixed_point));
  CHECK_THROWS_AS(g_apply(g, q, 0), DomainError);
}

TEST_CASE("eps_q changes sign at q_k") {
  const int k = 10;
  CHECK(epsilon_q(Base::root(k), k).value.contains_zero());
  CHECK(epsilon_q(Base::root_scaled(k, -1, 1, 40), k).negative == Tri::yes);
  CHECK(epsilon_q(Base::root_scaled(k, 1, 1, 40), k).positive == Tri::yes);
  CHECK(epsilon_bounds(Base::root_scaled(k, 1, 2, 3 * k + 3), k, 1).certified());
  CHECK_FALSE(epsilon_bounds(Base::root_scaled(k, 1, 1, 2 * k), k, 1).hypothesis_met);
}

TEST_CASE("zero ranks of the fixed expansion") {
  // Zeros get ranks 0, 1, 2, ... left to right.
  const std::vector<DigitClass> c = classify(Word{1, 0, 0, 0, 0, -1, 0});
  using D = DigitClass;
  CHECK(c == std::vector<D>{D::one, D::free_zero, D::fixed_one, D::free_zero, D::fixed_zero, D::minus_one,
                            D::free_zero});
  CHECK_THROWS_AS(classify(Word{2}), DomainError);
}

TEST_CASE("fixed expansion of 1") {
  for (int k : {9, 10, 12}) {
    const AqDescription root = fixed_expansion_of_one(Base::root(k), k, 2 * k + 4);
    CHECK(root.exact_root);
    CHECK(root.c == concat(repeat(Digit{1}, static_cast<std::size_t>(k)), repeat(Digit{0}, static_cast<std::size_t>(k + 4))));
    for (long sign : {-1L, 1L}) {
      const Base b = Base::root_scaled(k, sign, 1, 2 * k + 6);
      const AqDescription d = fixed_expansion_of_one(b, k, 3 * k);
      CHECK(Word(d.c.begin(), d.c.begin() + 2 * k + 4) == root.c);
      // The digits represent 1 up to the stored remainder.
      Enclosure v(0L);
      for (std::size_t j = 0; j < d.c.size(); ++j) v += d.powers[j + 1] * static_cast<long>(d.c[j]);
      CHECK((1 - v).overlaps(d.remainder * d.powers[d.c.size()]));
    }
  }
  CHECK_THROWS_AS(fixed_expansion_of_one(Base::root_scaled(10, 1, 1, 20), 10, 40), PreconditionViolation);
  CHECK_THROWS_AS(fixed_expansion_of_one(Base::root(8), 8, 40), DomainError);
}

TEST_CASE("A_q words and cylinders") {
  const int k = 9;
  const AqDescription d = fixed_expansion_of_one(Base::root(k), k, 40);
  const int n = 30;
  const std::vector<Word> words = aq_words(d, n);
  int free = 0;
  for (int j = 1; j <= n; ++j) free += d.cls(j) == DigitClass::free_zero;
  CHECK(words.size() == (std::size_t{1} << free));
  for (const Word& w : words) {
    for (int j = 1; j <= n; ++j) {
      const DigitClass c = d.cls(j);
      if (c == DigitClass::one || c == DigitClass::fixed_one) CHECK(w[j - 1] == 1);
      if (c == DigitClass::fixed_zero || c == DigitClass::minus_one) CHECK(w[j - 1] == 0);
    }
  }
  const std::vector<Interval> cyl = aq_cylinders(d, n);
  for (std::size_t i = 0; i + 1 < cyl.size(); ++i) CHECK(certainly_less(cyl[i].hi, cyl[i + 1].lo));
  const GapSet g = aq_gapset(d, n);
  CHECK(g.size() + 1 == cyl.size());
}

TEST_CASE("witness points") {
  for (int k : {9, 11}) {
    const WitnessReport w = witness_points(k);
    CHECK(w.certificate.certified());
    CHECK(certainly_less_equal(2 * w.eps, w.min_separation));
    const SubshiftSk s(k - 1);
    for (const WitnessPoint& p : w.points) {
      CHECK(s.contains(p.image_minus_one));
      CHECK((p.projected - 1).overlaps(p.closed_form));
    }
  }
  CHECK_THROWS_AS(witness_points(8), DomainError);
}

TEST_CASE("P and Q families near q_k") {
  const int k = 31, m = 1;
  struct Case {
    Base base;
    Layout layout;
  };
  for (const Case& c : {Case{Base::root_scaled(k, -1, 2, (m + 2) * k + 3), Layout::below_root},
                        Case{Base::root(k), Layout::at_root},
                        Case{Base::root_scaled(k, 1, 2, (m + 2) * k + 3), Layout::above_root}}) {
    PrecisionScope scope(4 * k + 128);
    const PQFamily f = build_pq_family(c.base, k, m, 2 * k);
    CHECK(f.layout == c.layout);
    CHECK(certainly_less(Enclosure::rational(1, 8), f.beta));
    CHECK(f.p_hulls.size() == static_cast<std::size_t>(m + 1));
  }
  CHECK_THROWS_AS(build_pq_family(Base::root(k), k, 0, 10), DomainError);
}
