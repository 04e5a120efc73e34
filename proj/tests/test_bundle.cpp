#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"

namespace wronsk {
namespace {

using testing::M;
using testing::R;
using testing::S;

PFBundle bundle(std::size_t n, long k, long c = 1) { return PFBundle(n, k, Rat(c), RatMatrix::identity(n)); }

TEST(BundleSpec, ParsesTextFormat) {
  const PFBundle v = parse_bundle_spec("rank=2 k=1 c=3 T=[[1, 1],[0,1]]");
  EXPECT_EQ(v.rank(), 2u);
  EXPECT_EQ(v.k(), 1);
  EXPECT_EQ(v.c(), 3);
  EXPECT_EQ(v.t(), M("[[1, 1], [0, 1]]"));
  EXPECT_EQ(parse_bundle_spec(v.to_string()), v);
  EXPECT_EQ(parse_bundle_spec("rank=3"), PFBundle::trivial(3));
  EXPECT_EQ(parse_bundle_spec("rank=2 k=-2 c=-3/4").c(), make_rat(-3, 4));
}

TEST(BundleSpec, Errors) {
  EXPECT_THROW(parse_bundle_spec("k=1"), ParseError);
  EXPECT_THROW(parse_bundle_spec("rank=2 q=1"), ParseError);
  EXPECT_THROW(parse_bundle_spec("rank=2 k=1/2"), ParseError);
  EXPECT_THROW(parse_bundle_spec("rank=2 T=[[1,z],[0,1]]"), ParseError);
  EXPECT_THROW(parse_bundle_spec("rank=2 T=[[1,1],[1,1]]"), SingularMatrixError);
  EXPECT_THROW(parse_bundle_spec("rank=2 c=0"), std::invalid_argument);
  EXPECT_THROW(parse_bundle_spec("rank=2 T=[[1]]"), DimensionError);
}

TEST(SectionTransfer, Examples) {
  EXPECT_EQ(section_transfer(Section(bundle(2, 0), S("1, z"))), S("1, 1/z"));
  EXPECT_EQ(section_transfer(Section(bundle(2, 1), S("1, z"))), S("z, 1"));
  EXPECT_TRUE(section_transfer(Section(parse_bundle_spec("rank=2 k=3 c=5 T=[[2,1],[1,1]]"), S("0, 0"))).is_zero());
  EXPECT_THROW(Section(bundle(2, 0), S("1")), DimensionError);
}

TEST(SectionTransfer, InverseTransitionRecoversChartZero) {
  const PFBundle v = parse_bundle_spec("rank=2 k=2 c=3 T=[[1,1],[0,1]]");
  const Section s(v, S("z^2 + 1, 1/(z-2)"));
  const VecSection inf = section_transfer(s);
  // s0(z) = c z^k T s_inf(1/z)
  const VecSection back = inf.compose(R("1/z")).times(v.t().transpose()).scaled(RatFunc(v.c()) * RatFunc::z().pow(v.k()));
  EXPECT_EQ(back, s.a0);
}

TEST(IsGenericSection, Examples) {
  EXPECT_TRUE(is_generic_section(Section(bundle(2, 0), S("1, z"))));
  EXPECT_FALSE(is_generic_section(Section(bundle(2, 4), S("z, z"))));
  EXPECT_TRUE(is_generic_section(Section(bundle(2, 1), S("1, 1/z"))));
}

TEST(GlobalDivisor, Examples) {
  Divisor d = global_wronskian_divisor(Section(bundle(2, 0), S("1, z")));
  EXPECT_TRUE(d.finite_part().empty());
  EXPECT_EQ(d.inf_mult(), -2);
  EXPECT_EQ(d.degree(), -2);

  EXPECT_EQ(global_wronskian_divisor(Section(bundle(3, 0), S("1, z, z^2"))).degree(), -6);
  EXPECT_EQ(global_wronskian_divisor(Section(bundle(2, 1), S("1, z"))).degree(), 0);
  EXPECT_THROW(global_wronskian_divisor(Section(bundle(2, 0), S("z, z"))), NotGenericError);
}

Divisor away_from_origin(const Divisor& d) {
  return (d - Divisor({{Poly::z(), d.multiplicity_at(Poly::z())}}, 0)).finite_only();
}

TEST(GlobalDivisor, ChartsAgreeOnTheOverlap) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(trial_seed(11, "overlap", t));
    const PFBundle v = random_bundle(rng, 1, 4, -3, 3, 3);
    const Section s(v, random_section(rng, v.rank(), 3, 3, 30));
    EXPECT_EQ(wronskian_matrix(section_transfer(s)), oracle::transferred_wronskian(s));
    if (!is_generic_section(s)) continue;
    const RatFunc w0 = wronskian_det(s.a0);
    const RatFunc winf = wronskian_det(section_transfer(s));
    EXPECT_EQ(away_from_origin(divisor_of(w0)), away_from_origin(divisor_of(winf.compose(R("1/z")))));
    EXPECT_EQ(global_wronskian_divisor(s).inf_mult(), oracle::valuation_at(winf, Rat(0)));
  }
}

TEST(GlobalDivisor, GenericityIsChartIndependent) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(trial_seed(11, "generic-chart", t));
    const PFBundle v = random_bundle(rng, 1, 3, -3, 3, 3);
    // Low degrees make non-generic draws common.
    const Section s(v, random_section(rng, v.rank(), 1, 2, 10));
    EXPECT_EQ(is_generic(s.a0), is_generic(section_transfer(s)));
  }
}

TEST(LineBundleDegree, Examples) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const PFBundle v = PFBundle::trivial(n);
    std::vector<RatFunc> mono, shifted;
    for (std::size_t i = 0; i < n; ++i) {
      mono.push_back(RatFunc::z().pow(static_cast<long>(i)));
      shifted.push_back(R("z^2+1").pow(static_cast<long>(i)));
    }
    const std::vector<Section> probes{Section(v, VecSection(mono)), Section(v, VecSection(shifted))};
    const auto lb = wronskian_line_bundle_degree_detail(v, probes);
    EXPECT_EQ(lb.degree, -static_cast<long>(n * (n - 1)));
    EXPECT_EQ(lb.probes_used, 2u);
  }
  for (long d = -2; d <= 3; ++d) {
    EXPECT_EQ(wronskian_line_bundle_degree(bundle(2, d), {Section(bundle(2, d), S("1, z")), Section(bundle(2, d), S("z^3, z-1"))}),
              2 * d - 2);
  }
  const PFBundle v = parse_bundle_spec("rank=2 k=1 c=3 T=[[1,1],[0,1]]");
  EXPECT_EQ(wronskian_line_bundle_degree(v, {Section(v, S("1, z")), Section(v, S("z^2 - 3, 2*z + 7"))}), 0);
}

TEST(LineBundleDegree, Errors) {
  const PFBundle v = bundle(2, 0);
  EXPECT_THROW(wronskian_line_bundle_degree(v, {}), ProbeError);
  EXPECT_THROW(wronskian_line_bundle_degree(v, {Section(v, S("z, z"))}), ProbeError);
  EXPECT_THROW(wronskian_line_bundle_degree(v, {Section(bundle(2, 1), S("1, z"))}), ProbeError);
  // Non-generic probes are skipped, not fatal, when a generic one exists.
  EXPECT_EQ(wronskian_line_bundle_degree(v, {Section(v, S("z, z")), Section(v, S("1, z"))}), -2);
}

TEST(OpenQuestionReport, Examples) {
  QuestionReport r = open_question_report(PFBundle::trivial(3), {Section(PFBundle::trivial(3), S("1, z, z^2"))});
  EXPECT_EQ(r.deg_w, -6);
  EXPECT_EQ(r.deg_det, 0);
  EXPECT_EQ(r.canonical_term, -6);
  EXPECT_TRUE(r.verdict);
  EXPECT_NE(r.scope.find("Riemann sphere"), std::string::npos);

  const PFBundle v2 = bundle(2, 3);
  r = open_question_report(v2, {Section(v2, S("1 + z, z^2"))});
  EXPECT_EQ(r.deg_w, 4);
  EXPECT_EQ(r.deg_det, 6);
  EXPECT_EQ(r.canonical_term, -2);
  EXPECT_TRUE(r.verdict);

  Rng rng(trial_seed(11, "rank4", 0));
  const PFBundle v4(4, -1, make_rat(2, 3), random_invertible_constant(rng, 4, 3));
  r = open_question_report(v4, {random_generic_probe(rng, v4, 3, 3), random_generic_probe(rng, v4, 3, 3)});
  EXPECT_EQ(r.deg_w, -16);
  EXPECT_EQ(r.deg_det, -4);
  EXPECT_EQ(r.canonical_term, -12);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.probes_used, 2u);
}

TEST(TwistCheck, Examples) {
  TwistCertificate c = tensor_twist_degree_check(PFBundle::trivial(2), 1, {Section(PFBundle::trivial(2), S("1, z"))});
  EXPECT_EQ(c.deg_w, -2);
  EXPECT_EQ(c.deg_w_twisted, 0);
  EXPECT_TRUE(c.passed());

  c = tensor_twist_degree_check(PFBundle::trivial(3), 2, {Section(PFBundle::trivial(3), S("1, z, z^2"))});
  EXPECT_EQ(c.deg_w_twisted, 0);
  EXPECT_TRUE(c.passed());

  c = tensor_twist_degree_check(bundle(2, 1), -1, {Section(bundle(2, 1), S("1, z"))});
  EXPECT_EQ(c.deg_w, 0);
  EXPECT_EQ(c.deg_w_twisted, -2);
  EXPECT_TRUE(c.passed());
}

TEST(WvbCocycle, Examples) {
  const Section rank1(bundle(1, 0), S("z"));
  EXPECT_EQ(det(wvb_cocycle(rank1).phi), wronskian_transition(rank1));

  const Section s(bundle(2, 0), S("1, z"));
  EXPECT_EQ(det(wvb_cocycle(s).phi), R("-1/z^2"));
  EXPECT_EQ(wronskian_transition(s), R("-1/z^2"));
  EXPECT_THROW(wvb_cocycle(Section(bundle(2, 0), S("z, z"))), NotGenericError);
}

TEST(WvbCocycle, DeterminantIsTheWronskianTransition) {
  for (std::uint64_t t = 0; t < 30; ++t) {
    Rng rng(trial_seed(11, "det-match", t));
    const PFBundle v = random_bundle(rng, 1, 4, -3, 3, 3);
    const Section s = random_generic_probe(rng, v, 3, 3);
    const RatFunc lam = wronskian_transition(s);
    EXPECT_EQ(det(wvb_cocycle(s).phi), lam);
    // The line bundle transition is a unit on the overlap: c' z^m.
    const Divisor d = divisor_of(lam);
    EXPECT_TRUE(d.finite_part().size() <= 1);
    if (!d.finite_part().empty()) {
      EXPECT_EQ(d.finite_part().front().point, Poly::z());
    }
  }
}

TEST(CoboundaryCheck, Examples) {
  const PFBundle v = PFBundle::trivial(2);
  const Section b(v, S("1, z"));

  CoboundaryCertificate c = coboundary_check(Section(v, S("z, z^2")), b, R("z"));
  EXPECT_EQ(c.lhs, c.rhs);
  EXPECT_TRUE(c.passed());

  const Section a(v, S("z^2, z^3 + z^2"));
  EXPECT_EQ(wronskian_det(a.a0), R("z^4"));
  c = coboundary_check(a, b, R("z^2"));
  EXPECT_EQ(c.divisor_difference, divisor_of(R("z^4")));
  EXPECT_TRUE(c.residual_zero());
  EXPECT_TRUE(c.det_match_a);
  EXPECT_TRUE(c.det_match_b);

  // Searching for f finds z^2 up to sign and the identity still holds.
  c = coboundary_check(a, b);
  EXPECT_EQ(divisor_of(c.f.pow(2)), divisor_of(R("z^4")));
  EXPECT_TRUE(c.passed());

  EXPECT_THROW(coboundary_check(a, b, R("z")), DivisorMismatchError);
  EXPECT_THROW(coboundary_check(Section(v, S("z, z^2")), b, RatFunc()), DivisorMismatchError);
  EXPECT_THROW(coboundary_check(Section(v, S("z, 1 + z^4")), b), DivisorMismatchError);
  EXPECT_THROW(coboundary_check(Section(v, S("z, z")), b, R("1")), NotGenericError);
}

TEST(CoboundaryCheck, ChartNativeCocyclesDoNotConjugateLiterally) {
  // With each Wronskian differentiated in its own chart coordinate, the cocycles
  // of A = z B and B differ by more than the quotient conjugation: the overlap
  // coordinate form is the one the identity holds in.
  const PFBundle v = PFBundle::trivial(2);
  const Section b(v, S("1, z"));
  const Section a(v, S("z, z^2"));
  EXPECT_NE(wvb_cocycle(a).phi, wvb_cocycle(b).phi);
  EXPECT_EQ(overlap_cocycle(a).phi, overlap_cocycle(b).phi);
}

TEST(CoboundaryCheck, RandomScaledSections) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    Rng rng(trial_seed(11, "coboundary", t));
    const PFBundle v = random_bundle(rng, 2, 3, -2, 2, 3);
    const Section b = random_generic_probe(rng, v, 2, 3);
    const RatFunc g = random_ratfunc(rng, 2, 3, 40);
    const Section a(v, b.a0.scaled(g));
    EXPECT_TRUE(coboundary_check(a, b, g).passed());
  }
}

TEST(ChernCocycle, HandDerivedFixture) {
  const ChernCertificate c = chern_cocycle_check(Section(bundle(2, 0), S("1, z")));
  EXPECT_TRUE(c.p1_zero.is_zero());
  EXPECT_EQ(c.p1_inf, R("-2/z"));  // in the w coordinate
  EXPECT_EQ(c.transition, R("-1/z^2"));
  EXPECT_EQ(c.lhs.coeff, R("-2/z"));
  EXPECT_EQ(c.rhs.coeff, R("-2/z"));
  EXPECT_TRUE(c.passed());
}

TEST(ChernCocycle, Examples) {
  EXPECT_TRUE(chern_cocycle_check(Section(bundle(2, 0), S("1, z^2"))).passed());
  const ChernCertificate c = chern_cocycle_check(Section(bundle(1, 2, 5), S("(z-1)/(z+3)")));
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.p1_zero, R("(z-1)/(z+3)").derivative() / R("(z-1)/(z+3)"));
  EXPECT_THROW(chern_cocycle_check(Section(bundle(2, 0), S("1, 1"))), NotGenericError);
}

TEST(MeroForm, PullbackAlongInversion) {
  const MeroForm dw_over_w{Chart::infinity, R("1/z")};
  // dw/w = -dz/z
  EXPECT_EQ(dw_over_w.to_chart(Chart::zero).coeff, R("-1/z"));
  EXPECT_EQ(dw_over_w.to_chart(Chart::zero).to_chart(Chart::infinity).coeff, dw_over_w.coeff);
  EXPECT_THROW((void)(MeroForm{Chart::zero, R("1")} - dw_over_w), std::invalid_argument);
}

TEST(BundleProperties, DegreeLawAndSectionIndependence) {
  for (std::uint64_t t = 0; t < 25; ++t) {
    Rng rng(trial_seed(11, "degree-law", t));
    const PFBundle v = random_bundle(rng, 1, 4, -3, 3, 3);
    const long n = static_cast<long>(v.rank());
    const std::vector<Section> probes{random_generic_probe(rng, v, 3, 3), random_generic_probe(rng, v, 3, 3)};
    const auto lb = wronskian_line_bundle_degree_detail(v, probes);
    EXPECT_EQ(lb.degree, n * v.k() - n * (n - 1));
    EXPECT_EQ(lb.divisors[1] - lb.divisors[0], divisor_of(det(quotient(probes[1].a0, probes[0].a0))));
    const long d = rng.uniform(-3, 3);
    EXPECT_TRUE(tensor_twist_degree_check(v, d, probes).passed());
    EXPECT_TRUE(chern_cocycle_check(probes[0]).passed());
  }
}

}  // namespace
}  // namespace wronsk
