#include "doctest.h"
#include "ffc/convolution.hpp"
#include "ffc/divisibility.hpp"
#include "ffc/error.hpp"
#include "ffc/families.hpp"
#include "ffc/transforms.hpp"
#include "support.hpp"

using namespace ffc;
using namespace ffc::divisibility;
using testing::Q;
using testing::Qs;

TEST_CASE("conditional positive definiteness") {
  CHECK(is_conditionally_positive_definite(Qs("0,1,0,0,0,0")));
  CHECK(is_conditionally_positive_definite(Qs("1,1,1,1")));
  CHECK_FALSE(is_conditionally_positive_definite(Qs("1,3/4,3/8,3/32")));
  CHECK(Q("3/4") * Q("3/32") - Q("3/8") * Q("3/8") == Q("-9/128"));
  CHECK_FALSE(is_conditionally_positive_definite(Qs("0,-1")));
  // Zero pivot with a nonzero off-diagonal entry.
  CHECK_FALSE(is_conditionally_positive_definite(Qs("0,0,1,0")));
  CHECK(is_conditionally_positive_definite(Qs("5,0,0,0,0,0")));
  CHECK_THROWS_AS(is_conditionally_positive_definite(Qs("1")), Error);
}

TEST_CASE("infinite divisibility report") {
  for (int d = 2; d <= 8; ++d) {
    const auto h = infinite_divisibility_report(families::hermite_clt(d));
    CHECK(h.verdict == Verdict::infinitely_divisible);
    CHECK(h.cpd_standard);
    CHECK(h.cpd_rescaled);
    const auto p = infinite_divisibility_report(families::finite_poisson(Rational(1, d), d));
    CHECK(p.verdict == (d == 2 ? Verdict::infinitely_divisible : Verdict::not_infinitely_divisible));
  }
  CHECK(infinite_divisibility_report(MonicPoly::monomial(4)).verdict == Verdict::infinitely_divisible);
  CHECK(infinite_divisibility_report(from_roots(Qs("2,2,2"))).verdict == Verdict::infinitely_divisible);
  const auto shifted = infinite_divisibility_report(from_roots(Qs("1,2,3")));
  CHECK(shifted.normalized);
  CHECK(shifted.centered_normalized == families::hermite_clt(3));
  CHECK(shifted.verdict == Verdict::infinitely_divisible);
  const auto unscaled = infinite_divisibility_report(from_roots(Qs("1,3")));
  CHECK_FALSE(unscaled.normalized);
  CHECK(unscaled.kappa == Qs("0,2"));
  CHECK_THROWS_AS(infinite_divisibility_report(from_plain_coefficients(Qs("1,0,1"))), Error);
}

TEST_CASE("verdict holds exactly for the Hermite polynomial among normalised inputs") {
  std::mt19937_64 rng(51);
  for (int d = 3; d <= 8; ++d) {
    for (int trial = 0; trial < 4; ++trial) {
      const auto r = infinite_divisibility_report(testing::random_real_rooted(rng, d));
      CHECK((r.verdict == Verdict::infinitely_divisible) == (r.normalized && r.centered_normalized == families::hermite_clt(d)));
      if (r.verdict == Verdict::infinitely_divisible) CHECK((r.cpd_standard && r.cpd_rescaled));
      if (r.cpd_rescaled) CHECK(r.cpd_standard);
    }
  }
}

TEST_CASE("real-rootedness threshold") {
  CHECK(real_rooted_threshold(families::hermite_clt(4), 1024) == Q("1/16"));
  const MonicPoly poi = families::finite_poisson(Q("1/4"), 4);
  CHECK(is_real_rooted(convolution::boxplus_power(poi, Q("4/3"))) == RealRootedness::no);
  CHECK(is_real_rooted(convolution::boxplus_power(poi, 4), true) == RealRootedness::yes);
  const auto t = real_rooted_threshold(poi, 1 << 20);
  REQUIRE(t.has_value());
  CHECK(*t > Q("4/3"));
  CHECK(*t <= 4);
  CHECK_FALSE(real_rooted_threshold(poi, Q("1/2")).has_value());
  CHECK_THROWS_AS(real_rooted_threshold(MonicPoly::monomial(3), 16), Error);
}

TEST_CASE("Cramer counterexample") {
  for (int d = 3; d <= 8; ++d) {
    const auto c = cramer_counterexample(d, Q("1/32"));
    std::vector<Rational> two(static_cast<std::size_t>(d));
    two[1] = 2;
    CHECK(transforms::cumulants_from_coefficients(c.convolution).kappa == two);
    CHECK(c.half_convolution == families::hermite_clt(d));
    CHECK(transforms::cumulants_from_coefficients(c.p_plus).kappa[2] == Q("1/32"));
  }
  const auto c4 = cramer_counterexample(4, Q("1/64"));
  CHECK(c4.plus_real_rooted);
  CHECK(c4.minus_real_rooted);
  CHECK_THROWS_AS(cramer_counterexample(2, Q("1/8")), Error);
}
