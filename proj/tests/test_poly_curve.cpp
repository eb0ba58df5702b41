#include <gtest/gtest.h>

#include "lpi/curve.hpp"
#include "lpi/errors.hpp"
#include "lpi/exponents.hpp"
#include "lpi/int_poly.hpp"
#include "lpi/transform.hpp"

using namespace lpi;

TEST(IntPoly, ParsesAndPrints) {
  EXPECT_EQ(parse_poly("2n^3 - n").to_string(), "2n^3-n");
  EXPECT_EQ(parse_poly("n^2+n").to_string(), "n^2+n");
  EXPECT_EQ(parse_poly(" -3n^5 + 7n - 1 ").to_string(), "-3n^5+7n-1");
  for (const char* t : {"n^2", "2n^3-n", "n^2+n", "-n", "5", "n^7-n^3+2"})
    EXPECT_EQ(parse_poly(parse_poly(t).to_string()), parse_poly(t)) << t;
}

TEST(IntPoly, RejectsBadInput) {
  EXPECT_THROW(parse_poly("n^"), ParseError);
  EXPECT_THROW(parse_poly("1/2n"), ParseError);
  EXPECT_THROW(parse_poly("x^2"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
  try {
    parse_poly("n^2 + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(IntPoly, EvaluatesExactly) {
  const IntPoly p = parse_poly("2n^3-n");
  EXPECT_EQ(p.eval(mpz_class(3)), 51);
  EXPECT_EQ(p.eval_i64(-2), -14);
  const IntPoly big = parse_poly("n^5");
  EXPECT_EQ(big.eval(mpz_class("100000000000")), mpz_class("10000000000000000000000000000000000000000000000000000000"));
}

TEST(IntPoly, IntegerRoots) {
  const auto r = integer_roots(parse_poly("n^3-6n^2+11n-6"), -10, 10);
  EXPECT_FALSE(r.all_roots);
  EXPECT_EQ(r.roots, (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(r.count_in(2, 3), 2);
  const auto z = integer_roots(IntPoly(), -3, 3);
  EXPECT_TRUE(z.all_roots);
  EXPECT_EQ(z.count_in(-3, 3), 7);
  EXPECT_EQ(integer_roots(parse_poly("2n^2+1"), -50, 50).roots.size(), 0u);
}

TEST(Curve, Validation) {
  EXPECT_NO_THROW(parse_curve("n,n^2,n^3"));
  EXPECT_THROW(parse_curve("n^2,n^2"), HypothesisError);
  EXPECT_THROW(parse_curve("n,5"), HypothesisError);
  EXPECT_THROW(parse_curve("n^2,n"), HypothesisError);
  const Curve u = parse_curve_unchecked("n^2,n^2+n");
  EXPECT_FALSE(u.is_separated());
  EXPECT_THROW(u.require_valid(), HypothesisError);
}

TEST(Curve, TotalDegreeAndEval) {
  EXPECT_EQ(total_degree(Curve::moment(3)), 6);
  EXPECT_EQ(total_degree(parse_curve("n^2")), 2);
  EXPECT_EQ(total_degree(parse_curve("n,n^3+1")), 4);
  EXPECT_EQ(eval_curve(Curve::moment(3), 3), (LatticePoint{3, 9, 27}));
  EXPECT_TRUE(Curve::moment(2).injective_on(100));
  EXPECT_FALSE(parse_curve("n^2-5n").injective_on(10));
  EXPECT_EQ(Curve::moment(3).fibre_bound(), 1);
  EXPECT_EQ(parse_curve("n^2").fibre_bound(), 2);
}

TEST(Curve, Projection) {
  const Curve c = Curve::moment(3);
  EXPECT_EQ(project(c, {0, 2}).to_string(), "n,n^3");
  EXPECT_EQ(project(c, {1}).to_string(), "n^2");
  EXPECT_THROW(project(c, {3}), HypothesisError);
}

TEST(Exponents, CriticalExponent) {
  EXPECT_EQ(critical_exponent_for_degree(2), mpq_class(3, 2));
  EXPECT_EQ(critical_exponent_for_degree(3), mpq_class(5, 3));
  EXPECT_EQ(critical_exponent_for_degree(6), mpq_class(11, 6));
  EXPECT_EQ(critical_exponent(Curve::moment(3)), mpq_class(11, 6));
}

TEST(Exponents, Regions) {
  EXPECT_EQ(classify_exponents(3, ExponentPair(mpq_class(1, 2), mpq_class(1, 2))), Region::supercritical);
  EXPECT_EQ(classify_exponents(3, ExponentPair(1, 0)), Region::subcritical);
  EXPECT_EQ(classify_exponents(3, ExponentPair(mpq_class(1, 3), mpq_class(1, 2))), Region::outside);
  for (int D = 1; D <= 10; ++D) {
    const mpq_class v(D, 2 * D - 1);
    EXPECT_EQ(classify_exponents(D, ExponentPair(v, 1 - v)), Region::critical_boundary) << D;
    EXPECT_EQ(classify_exponents(D, ExponentPair(0, 0)), Region::critical_boundary) << D;
    EXPECT_EQ(classify_exponents(D, ExponentPair(1, 1)), Region::critical_boundary) << D;
  }
}

TEST(Exponents, ConjecturedConstant) {
  const ExponentPair e(mpq_class(2, 3), mpq_class(1, 3));
  // N^{-2/3} + N^{-2/3} + N^{-2/3} for D = 2
  const Real v = conjectured_constant(2, e, 8);
  EXPECT_NEAR(static_cast<double>(v), 3.0 / 4.0, 1e-30);
  EXPECT_EQ(dominant_term(6, e), DominantTerm::dirac);
  EXPECT_EQ(dominant_term(1, ExponentPair(1, 0)), DominantTerm::box);
}

TEST(Transform, ShearAndDilation) {
  const Curve c = Curve::moment(2);
  AffineTransform t({Dilation{{2, 1}}});
  t.then(Shear{1, 0, 3});
  EXPECT_EQ(apply_transform(c, t).to_string(), "2n,n^2-6n");
  EXPECT_THROW(AffineTransform({Dilation{{0, 1}}}).validate(2), HypothesisError);
  EXPECT_THROW(AffineTransform({Shear{1, 1, 1}}).validate(2), HypothesisError);
  EXPECT_THROW(apply_transform(parse_curve("n"), AffineTransform({Shear{0, 0, 1}})), HypothesisError);
}

TEST(Transform, ReductionRoundTrip) {
  for (const char* text : {"2n+3,4n^2+2n+5", "n+1,n^2", "-n,n^2-n,2n^3+n", "3n,n^3"}) {
    const Curve in = parse_curve(text);
    const Reduction r = reduce_canonical(in);
    EXPECT_TRUE(r.diagnostic.empty()) << text;
    EXPECT_EQ(apply_transform(r.reduced, r.transform), in) << text;
  }
  const Reduction r = reduce_canonical(parse_curve("2n+3,4n^2+2n+5"));
  EXPECT_EQ(r.reduced.to_string(), "n,n^2");
  const Reduction same = reduce_canonical(parse_curve("n^2,n^3"));
  EXPECT_TRUE(same.transform.empty());
}
