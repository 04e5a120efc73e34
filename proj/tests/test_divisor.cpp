#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

namespace wronsk {
namespace {

using testing::P;
using testing::R;

TEST(DivisorOf, Examples) {
  Divisor d = divisor_of(R("z^2/(z-1)"));
  EXPECT_EQ(d.finite_part(), (std::vector<DivisorTerm>{{P("z"), 2}, {P("z-1"), -1}}));
  EXPECT_EQ(d.inf_mult(), -1);
  EXPECT_EQ(d.to_string(), "2*(z) - 1*(z-1) - 1*(inf)");

  d = divisor_of(R("7"));
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.to_string(), "0");

  d = divisor_of(R("(z^2-2)^3"));
  EXPECT_EQ(d.finite_part(), (std::vector<DivisorTerm>{{P("z^2-2"), 3}}));
  EXPECT_EQ(d.inf_mult(), -6);

  EXPECT_THROW(divisor_of(RatFunc()), ZeroDivisionError);
}

TEST(DivisorOf, MatchesPointwiseValuations) {
  const RatFunc r = R("(z-1)^3*(z+2)/((z-4)^2*z)");
  const Divisor d = divisor_of(r);
  for (long x : {1L, -2L, 4L, 0L, 3L}) {
    EXPECT_EQ(d.multiplicity_at(P("z") - Poly(Rat(x))), oracle::valuation_at(r, Rat(x))) << x;
  }
  EXPECT_EQ(d.inf_mult(), oracle::valuation_at_infinity(r));
}

TEST(DivisorCombine, Examples) {
  EXPECT_TRUE((divisor_of(R("z")) + divisor_of(R("1/z"))).is_zero());
  const Divisor d = divisor_of(R("z^2-1")) - divisor_of(R("z-1"));
  EXPECT_EQ(d.finite_part(), (std::vector<DivisorTerm>{{P("z+1"), 1}}));
  EXPECT_EQ(d.inf_mult(), -1);
}

TEST(DivisorCombine, MergesEqualMultiplicities) {
  const Divisor d = divisor_of(R("z-1")) + divisor_of(R("z-2"));
  EXPECT_EQ(d, divisor_of(R("(z-1)*(z-2)")));
  EXPECT_EQ(d.finite_part().size(), 1u);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(divisor_of(R("(z^3+1)/(z-5)^2"))), 0);
  EXPECT_EQ(degree(Divisor({{P("z^2-2"), 3}}, -6)), 0);
  EXPECT_EQ(degree(Divisor({{P("z"), 2}}, 0)), 2);
}

TEST(IsNthPower, Examples) {
  auto f = is_nth_power(divisor_of(R("z^4")), 2);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, R("z^2"));
  EXPECT_FALSE(is_nth_power(divisor_of(R("z^3")), 2).has_value());
  f = is_nth_power(Divisor(), 5);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->is_one());
  // Even multiplicities but nonzero degree: not principal.
  EXPECT_FALSE(is_nth_power(Divisor({{P("z"), 2}}, 0), 2).has_value());
}

TEST(DivisorProperties, Homomorphism) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(trial_seed(7, "hom", t));
    const RatFunc r = random_ratfunc(rng, 3, 3, 60);
    const RatFunc s = random_ratfunc(rng, 3, 3, 60);
    EXPECT_EQ(divisor_of(r * s), divisor_of(r) + divisor_of(s));
    EXPECT_EQ(degree(divisor_of(r)), 0);
    EXPECT_EQ(divisor_of(r) + Divisor(), divisor_of(r));
    EXPECT_TRUE((divisor_of(r) - divisor_of(r)).is_zero());
  }
}

TEST(DivisorProperties, NthPowerWitnessRoundTrip) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    Rng rng(trial_seed(7, "nth", t));
    const long n = rng.uniform(1, 4);
    const RatFunc g = random_ratfunc(rng, 2, 3, 60);
    const Divisor d = divisor_of(g.pow(n));
    auto f = is_nth_power(d, n);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(divisor_of(f->pow(n)), d);
  }
}

}  // namespace
}  // namespace wronsk
