#include <doctest.h>

#include "betacert/certify.hpp"
#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"

using namespace betacert;

TEST_CASE("K_m is nondecreasing in m") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(k_threshold(m) > 4);
    CHECK(k_threshold(m) <= k_threshold(m + 1));
  }
  const int k3 = k_threshold(3);
  {
    PrecisionScope low(64);
    CHECK(k_threshold(3) == k3);
  }
  CHECK_THROWS_AS(k_threshold(0), DomainError);
}

TEST_CASE("Falconer-Yavicoli inequality engine") {
  const Enclosure beta = Enclosure::rational(1, 8);
  const Enclosure c = default_c();
  const Enclosure rhs = fy_rhs(beta, c);
  CHECK(rhs.certainly_positive());
  // rhs = beta^c (1 - beta^(1-c)) / 432^2, checked against an independent evaluation.
  const Enclosure alt = (c * beta.log()).exp() * (1 - ((1 - c) * beta.log()).exp()) / 186624;
  CHECK(rhs.overlaps(alt));
  CHECK(fy_inequality(1, Enclosure(1L), beta, c).checks.front().status == CheckStatus::failed);
  // lhs decreases in tau.
  const Enclosure big = Enclosure(2L).pow(40);
  CHECK(fy_inequality(1, big, beta, c).certified());
  CHECK_THROWS_AS(fy_inequality(0, big, beta, c), DomainError);
  CHECK_THROWS_AS(fy_inequality(1, big, Enclosure::rational(1, 2), c), DomainError);
  CHECK_THROWS_AS(fy_inequality(1, big, beta, Enclosure(1L)), DomainError);
}

TEST_CASE("dimension lower bound") {
  const Enclosure q = bonacci_root(40).value;
  const Enclosure d1 = dim_lower_bound(1, q, 40);
  const Enclosure d2 = dim_lower_bound(2, q, 40);
  CHECK(certainly_less(d2, d1));
  CHECK(certainly_less(d1, Enclosure(1L)));
  CHECK(certainly_less(dim_lower_bound(1, bonacci_root(12).value, 12), Enclosure(0L)));
}

TEST_CASE("radii") {
  const Enclosure q10 = bonacci_root(10).value;
  CHECK(theorem_b_radius(10).overlaps(q10.pow(-26)));
  CHECK(theorem_b_radius(9).overlaps(bonacci_root(9).value.pow(-24)));
  CHECK(theorem_a_radius(2, 32).overlaps(bonacci_root(32).value.pow(-(4 * 32 + 3))));
  CHECK_THROWS_AS(theorem_b_radius(8), DomainError);
  {
    PrecisionScope low(64);
    CHECK_THROWS_AS(require_root_resolution(33, theorem_a_radius(5, 33), "test"), PrecisionError);
  }
  CHECK_NOTHROW(require_root_resolution(33, theorem_a_radius(5, 33), "test"));
}

TEST_CASE("matching against printed decimals") {
  const Enclosure v = Enclosure::parse("1.234567");
  CHECK(matches_printed(v, "1.23457", PrintedMode::rounded) == Tri::yes);
  CHECK(matches_printed(v, "1.23456", PrintedMode::rounded) == Tri::no);
  CHECK(matches_printed(v, "1.23456", PrintedMode::rounded_or_truncated) == Tri::yes);
  CHECK(matches_printed(v, "1.23455", PrintedMode::rounded_or_truncated) == Tri::no);
  CHECK(matches_printed(Enclosure::parse("3.6222716e-71"), "3.62227e-71", PrintedMode::rounded) == Tri::yes);
  // The enclosure straddles a rounding boundary.
  CHECK(matches_printed(Enclosure::hull(Enclosure::parse("1.2344"), Enclosure::parse("1.2346")), "1.234",
                        PrintedMode::rounded) == Tri::unknown);
}

TEST_CASE("Theorem A certificate below the threshold") {
  const Certificate c = theorem_a_certify(1, 20, std::nullopt);
  CHECK_FALSE(c.hypothesis_met);
  CHECK_FALSE(c.certified());
}

TEST_CASE("Theorem A on a point base") {
  const Certificate c = theorem_a_certify(1, 31, Base::root(31));
  CHECK(c.certified());
  const Certificate far = theorem_a_certify(1, 31, parse_base("1.99"));
  CHECK_FALSE(far.certified());
}

TEST_CASE("Theorem B without the count stage") {
  TheoremOptions opt;
  opt.run_count = false;
  const Certificate c = theorem_b_certify(9, parse_base("qk:9+1e-8"), opt);
  CHECK(c.certified());
  const Certificate at_root = theorem_b_certify(9, Base::root(9), opt);
  CHECK_FALSE(at_root.certified());
  CHECK_THROWS_AS(theorem_b_certify(8, std::nullopt, opt), DomainError);
}
