#include <doctest.h>

#include <random>

#include "betacert/errors.hpp"
#include "betacert/expansions.hpp"
#include "betacert/realnum.hpp"
#include "oracle.hpp"

using namespace betacert;

namespace {

struct Instance {
  mpq_class q, x;
};

// q = a / 2^b with a - 2^b odd and > 1, so 1/(q-1) and 1/(q(q-1)) are not
// dyadic while every orbit point of a dyadic x is; all comparisons decide.
std::vector<Instance> dyadic_instances(std::mt19937_64& rng, std::size_t n) {
  std::vector<Instance> out;
  std::uniform_int_distribution<int> bexp(3, 6);
  while (out.size() < n) {
    const int b = bexp(rng);
    const long den = 1L << b;
    const long a = std::uniform_int_distribution<long>(den + 3, 2 * den - 1)(rng);
    if ((a - den) % 2 == 0) continue;
    const mpq_class q(a, den);
    const mpq_class top = 1 / (q - 1);
    const long xden = 1L << 10;
    const long xnum = std::uniform_int_distribution<long>(0, 1L << 12)(rng);
    const mpq_class x(xnum, xden);
    if (x > top) continue;
    out.push_back({q, x});
  }
  return out;
}

}  // namespace

TEST_CASE("prefix counts equal exhaustive exact counts") {
  std::mt19937_64 rng(17);
  for (const Instance& in : dyadic_instances(rng, 50)) {
    const CountReport r = count_prefixes(oracle::to_enclosure(in.q), oracle::to_enclosure(in.x), 12);
    for (int d = 1; d <= 12; ++d) {
      const std::size_t exact = oracle::prefix_count(in.q, in.x, d);
      CHECK(r.levels[static_cast<std::size_t>(d)].certified_min == exact);
      CHECK(r.levels[static_cast<std::size_t>(d)].possible_max == exact);
    }
  }
}

TEST_CASE("prefix counts bracket exact counts for general rationals") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 40; ++i) {
    const long den = std::uniform_int_distribution<long>(3, 40)(rng);
    const long num = std::uniform_int_distribution<long>(den + 1, 2 * den - 1)(rng);
    const mpq_class q(num, den);
    const mpq_class x(std::uniform_int_distribution<long>(0, 100)(rng), 100);
    if (x > 1 / (q - 1)) continue;
    const CountReport r = count_prefixes(oracle::to_enclosure(q), oracle::to_enclosure(x), 10);
    for (int d = 1; d <= 10; ++d) {
      const std::size_t exact = oracle::prefix_count(q, x, d);
      CHECK(r.levels[static_cast<std::size_t>(d)].certified_min <= exact);
      CHECK(exact <= r.levels[static_cast<std::size_t>(d)].possible_max);
    }
  }
}

TEST_CASE("certified counts never decrease with depth") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const Enclosure q = Enclosure::parse(std::to_string(std::uniform_int_distribution<int>(1400, 1999)(rng)) + "/1000");
    const Enclosure x = iq_right(q) * Enclosure::rational(std::uniform_int_distribution<long>(0, 1000)(rng), 1000);
    const CountReport r = count_prefixes(q, x, 16);
    for (std::size_t d = 1; d < r.levels.size(); ++d) {
      CHECK(r.levels[d - 1].certified_min <= r.levels[d].certified_min);
      CHECK(r.levels[d].certified_min <= r.levels[d].possible_max);
    }
  }
}

TEST_CASE("endpoints of I_q have one expansion") {
  for (const char* qs : {"1.3", "1.618", "1.9", "1.999"}) {
    const Enclosure q = Enclosure::parse(qs);
    const CountReport zero = count_prefixes(q, Enclosure(0L), 200);
    const CountReport top = count_prefixes(q, iq_right(q), 200);
    CHECK(zero.levels.back().certified_min == 1);
    CHECK(zero.levels.back().possible_max == 1);
    CHECK(top.levels.back().certified_min == 1);
    CHECK(top.levels.back().possible_max == 1);
  }
}

TEST_CASE("count errors") {
  const Enclosure q = Enclosure::parse("1.5");
  CHECK_THROWS_AS(count_prefixes(q, Enclosure(5L), 10), DomainError);
  CHECK_THROWS_AS(count_prefixes(q, Enclosure(1L), 0), DomainError);
  CHECK_THROWS_AS(count_prefixes(Enclosure::parse("1.05"), Enclosure(1L), 40, 1000), ResourceError);
}

TEST_CASE("digit maps") {
  const Enclosure q = Enclosure::parse("1.75");
  const DigitMaps maps(q);
  CHECK(maps.in_switch(Enclosure::rational(2, 3)) == Tri::yes);
  CHECK(maps.in_switch(Enclosure::rational(1, 4)) == Tri::no);
  CHECK(maps.in_domain(0, Enclosure::rational(1, 4)) == Tri::yes);
  CHECK(maps.in_domain(1, Enclosure::rational(1, 4)) == Tri::no);
  CHECK(maps.apply_extended(-1, Enclosure(0L)).contains(1));
  CHECK_THROWS_AS(maps.apply_extended(2, Enclosure(0L)), DomainError);
  // x = 1/4 has a unique path 0 0 ... until it enters the switch region.
  CHECK(map_uniquely_check(q, Enclosure::rational(1, 4), q * q / 4, Word{0, 0}) == Tri::yes);
  CHECK(map_uniquely_check(q, Enclosure::rational(1, 4), Enclosure(1L), Word{0}) == Tri::no);
  CHECK_THROWS_AS(map_uniquely_check(q, Enclosure::rational(2, 3), Enclosure(0L), Word{0}), PreconditionViolation);
}

TEST_CASE("m-expansion evidence") {
  const Enclosure q = Enclosure::parse("1.9");
  const Certificate one = certify_m_expansions(q, Enclosure(0L), 1, 60);
  CHECK(one.certified());
  CHECK(one.grade() == Grade::finite_depth_evidence);
  CHECK_FALSE(certify_m_expansions(q, Enclosure(0L), 2, 60).certified());
  CHECK_THROWS_AS(certify_m_expansions(q, Enclosure(0L), 0, 60), DomainError);
}
