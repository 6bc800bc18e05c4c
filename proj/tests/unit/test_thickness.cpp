#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"
#include "betacert/symbolic.hpp"
#include "betacert/thickness.hpp"
#include "oracle.hpp"

using namespace betacert;

namespace {

// Random set in [0, 1] with dyadic endpoints; with `ties` gap lengths are
// drawn from a short list so that equal lengths are common.
oracle::RationalGapSet random_set(std::mt19937_64& rng, bool ties) {
  const long grid = 1L << 12;
  std::uniform_int_distribution<int> count(1, 12);
  std::uniform_int_distribution<long> pos(1, grid - 1);
  const int n = count(rng);
  std::vector<long> cuts;
  while (static_cast<int>(cuts.size()) < 2 * n) {
    long p = pos(rng);
    if (std::find(cuts.begin(), cuts.end(), p) == cuts.end()) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  oracle::RationalGapSet s;
  s.lo = 0;
  s.hi = 1;
  for (int i = 0; i < n; ++i) {
    long a = cuts[2 * i], b = cuts[2 * i + 1];
    if (ties) {
      const long next = i + 1 < n ? cuts[2 * i + 2] : grid;
      static const long lens[] = {4, 8, 16};
      const long len = lens[std::uniform_int_distribution<int>(0, 2)(rng)];
      if (a + len < next) b = a + len;
    }
    s.gaps.push_back({mpq_class(a, grid), mpq_class(b, grid)});
  }
  return s;
}

}  // namespace

TEST_CASE("thickness agrees with the exact bridge formula") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_set(rng, i % 2 == 0);
    const auto expected = oracle::thickness(s);
    const ThicknessValue t = thickness(oracle::to_gapset(s));
    REQUIRE(expected);
    CHECK(oracle::encloses(t.tau, *expected));
  }
}

TEST_CASE("processing order among equal gaps does not matter") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_set(rng, true);
    const GapSet g = oracle::to_gapset(s);
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    // Decreasing length with a random order inside each tie class.
    std::shuffle(order.begin(), order.end(), rng);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return s.gaps[a].second - s.gaps[a].first > s.gaps[b].second - s.gaps[b].first;
    });
    const ThicknessValue a = thickness_in_order(g, order);
    const ThicknessValue b = thickness(g);
    CHECK(a.tau.overlaps(b.tau));
    CHECK(oracle::encloses(a.tau, *oracle::thickness(s)));
  }
}

TEST_CASE("thickness is invariant under exact affine maps") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const GapSet g = oracle::to_gapset(random_set(rng, false));
    const ThicknessValue t = thickness(g);
    const ThicknessValue u = thickness(g.affine(Enclosure(8L), Enclosure::rational(3, 4)));
    CHECK(mpfr_equal_p(t.tau.lo(), u.tau.lo()));
    CHECK(mpfr_equal_p(t.tau.hi(), u.tau.hi()));
  }
}

TEST_CASE("gap set validation") {
  using G = std::vector<Gap>;
  CHECK_THROWS_AS(GapSet(Enclosure(0L), Enclosure(1L), G{{Enclosure::rational(1, 2), Enclosure::rational(1, 4)}}),
                  MalformedInput);
  CHECK_THROWS_AS(GapSet(Enclosure(0L), Enclosure(1L),
                         G{{Enclosure::rational(1, 8), Enclosure::rational(1, 2)},
                           {Enclosure::rational(1, 4), Enclosure::rational(3, 4)}}),
                  MalformedInput);
  const GapSet none(Enclosure(0L), Enclosure(1L), G{});
  CHECK(thickness(none).infinite);
}

TEST_CASE("structured S_k thickness equals the explicit gap computation") {
  for (int k : {3, 4, 5}) {
    const Enclosure q = bonacci_root(k).value + Enclosure::rational(1, 1000);
    for (int depth : {6, 9, 12}) {
      const ThicknessValue a = sk_thickness(q, k, depth);
      const ThicknessValue b = thickness(gaps_of_sk(q, k, depth).set);
      CHECK(a.tau.overlaps(b.tau));
      const ThicknessValue c = sk_thickness(q, k, depth, Word{1, 0});
      const ThicknessValue d = thickness(gaps_of_sk(q, k, depth, Word{1, 0}).set);
      CHECK(c.tau.overlaps(d.tau));
    }
  }
}

TEST_CASE("S_(k-1) thickness exceeds q^(k-4) near q_k") {
  for (int k = 5; k <= 12; ++k) {
    for (long sign : {-1L, 1L}) {
      const Enclosure q = Base::root_scaled(k, sign, 1, 2 * k + 6).current();
      CHECK(sk_thickness(q, k - 1, 3 * k).at_least(q.pow(k - 4)));
    }
  }
}

TEST_CASE("Hausdorff distance") {
  using G = std::vector<Gap>;
  const GapSet a(Enclosure(0L), Enclosure(1L), G{{Enclosure::rational(1, 4), Enclosure::rational(1, 2)}});
  const GapSet b(Enclosure(0L), Enclosure(1L), G{{Enclosure::rational(1, 4), Enclosure::rational(3, 8)}});
  CHECK(hausdorff_distance(a, a).contains_zero());
  // The point 3/8 of b is 1/8 away from a.
  CHECK(hausdorff_distance(a, b).contains(Enclosure::rational(1, 8)));
  CHECK(hausdorff_distance(b, a).contains(Enclosure::rational(1, 8)));
}

TEST_CASE("Newhouse gap lemma") {
  using G = std::vector<Gap>;
  // Middle-fifth sets have thickness 2.
  const GapSet a(Enclosure(0L), Enclosure(1L), G{{Enclosure::rational(2, 5), Enclosure::rational(3, 5)}});
  const GapSet b(Enclosure::rational(1, 2), Enclosure::rational(3, 2),
                 G{{Enclosure::rational(9, 10), Enclosure::rational(11, 10)}});
  CHECK(interleaving(a, b) == Tri::yes);
  CHECK(newhouse_certificate(a, b).certified());
  const GapSet far = b.affine(Enclosure(1L), Enclosure(5L));
  CHECK(interleaving(a, far) == Tri::no);
  CHECK_FALSE(newhouse_certificate(a, far).certified());
  const GapSet inside(Enclosure::rational(9, 20), Enclosure::rational(11, 20), G{});
  CHECK(inside_gap(inside, a) == Tri::yes);
}

TEST_CASE("strong interleaving") {
  const Enclosure e = Enclosure::rational(1, 100);
  CHECK(strongly_interleaved(Enclosure(0L), Enclosure(2L), Enclosure(1L), Enclosure(3L), e).certified());
  CHECK_FALSE(strongly_interleaved(Enclosure(0L), Enclosure::rational(101, 100), Enclosure(1L), Enclosure(3L), e)
                  .certified());
}
