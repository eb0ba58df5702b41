#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "lpi/errors.hpp"
#include "lpi/operators.hpp"
#include "lpi/set_io.hpp"
#include "lpi/sparse.hpp"
#include "oracles.hpp"

using namespace lpi;

namespace {

SparseFunction random_function(std::size_t d, std::mt19937_64& rng) {
  SparseFunction f(d);
  for (int i = 0; i < 10; ++i) {
    LatticePoint p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = static_cast<std::int64_t>(rng() % 13) - 6;
    f.set(p, rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(1 + rng() % 3)));
  }
  return f;
}

}  // namespace

TEST(SparseSet, SortedAndDeduplicated) {
  const SparseSet s(2, {{3, 1}, {0, 0}, {3, 1}, {-1, 5}});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.points().front(), (LatticePoint{-1, 5}));
  EXPECT_TRUE(s.contains({0, 0}));
  EXPECT_FALSE(s.contains({1, 0}));
  EXPECT_THROW(SparseSet(2, {{1}}), HypothesisError);
}

TEST(BoxSet, SizeAndMaterialize) {
  const BoxSet b = BoxSet::centered({2, 5});
  EXPECT_EQ(b.size(), 5 * 11);
  EXPECT_EQ(b.materialize(100).size(), 55u);
  EXPECT_THROW(b.materialize(10), BudgetExceeded);
  EXPECT_TRUE(b.contains({-2, 5}));
  EXPECT_FALSE(b.contains({3, 0}));
}

TEST(Operators, AverageOfIndicatorAtOrigin) {
  // dirac at 0: A_N 1_{0} is 1/N on gamma([1,N])
  const Curve c = Curve::moment(2);
  const auto f = SparseFunction::indicator(SparseSet(2, {LatticePoint(2)}));
  const auto a = average(c, 5, f);
  EXPECT_EQ(a.support_size(), 5u);
  EXPECT_EQ(a.value({3, 9}), mpq_class(1, 5));
  EXPECT_EQ(a.total(), 1);
}

TEST(Operators, AdjointIdentity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Curve c = t % 2 ? Curve::moment(2) : parse_curve("n^3");
    const std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 6);
    const auto f = random_function(c.dim(), rng), g = random_function(c.dim(), rng);
    EXPECT_EQ(pairing(average_unnormalized(c, N, f), g), pairing(f, adjoint_unnormalized(c, N, g)));
  }
}

TEST(Operators, RestrictedAverage) {
  const RestrictedSequence seq(parse_poly("n^2"));
  EXPECT_EQ(seq.values(10), (std::vector<std::int64_t>{1, 4, 9}));
  const Curve c = parse_curve("n");
  const auto f = SparseFunction::indicator(SparseSet(1, {LatticePoint{0}}));
  const auto a = restricted_average(c, seq, 10, f);
  EXPECT_EQ(a.value({4}), mpq_class(1, 3));
  EXPECT_THROW(RestrictedSequence(parse_poly("-n^2")), HypothesisError);
  EXPECT_THROW(RestrictedSequence(parse_poly("3")), HypothesisError);
}

TEST(Operators, Norms) {
  SparseFunction f(1);
  f.set({0}, 3);
  f.set({1}, -4);
  EXPECT_EQ(lq_norm_pow(f, 2), 25);
  EXPECT_NEAR(static_cast<double>(lq_norm(f, LqExponent::of(2))), 5.0, 1e-40);
  EXPECT_NEAR(static_cast<double>(lq_norm(f, LqExponent::inf())), 4.0, 1e-40);
  EXPECT_NEAR(static_cast<double>(lq_norm(f, LqExponent::parse("3/2"))), std::pow(std::pow(3, 1.5) + 8, 2.0 / 3), 1e-12);
  EXPECT_THROW(LqExponent::parse("1/2"), HypothesisError);
}

TEST(Operators, IncidenceMatchesOracle) {
  std::mt19937_64 rng(3);
  const Curve c = Curve::moment(2);
  const oracle::Curve oc = {{0, 1}, {0, 0, 1}};
  for (int t = 0; t < 20; ++t) {
    std::vector<LatticePoint> e, f;
    std::vector<oracle::Point> eo;
    for (int i = 0; i < 40; ++i) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % 10), b = static_cast<std::int64_t>(rng() % 40);
      e.push_back({a, b});
      f.push_back({static_cast<std::int64_t>(rng() % 10), static_cast<std::int64_t>(rng() % 40)});
    }
    const SparseSet E(2, e), F(2, f);
    for (const auto& p : E) eo.push_back({p[0], p[1]});
    const auto expect = oracle::incidence(oc, 6, eo, [&](const oracle::Point& x) { return F.contains({x[0], x[1]}); });
    EXPECT_EQ(incidence(c, 6, E, F), expect);
  }
}

TEST(Operators, BoxIncidenceClosedForm) {
  const Curve c = Curve::moment(2);
  const BoxSet E({-3, -10}, {3, 10}), F({0, 0}, {5, 40});
  EXPECT_EQ(incidence(c, 5, E, F), incidence(c, 5, E.materialize(1000), F.materialize(1000)));
  const auto ab = alpha_beta(E, F, c, 5);
  EXPECT_EQ(ab.alpha, rational(ab.mass, F.size()));
}

TEST(Operators, AlphaBetaOfDirac) {
  const Curve c = Curve::moment(2);
  const SparseSet E(2, {LatticePoint(2)}), F(2, c.samples(7));
  const auto ab = alpha_beta(E, F, c, 7);
  EXPECT_EQ(ab.mass, 7);
  EXPECT_EQ(ab.alpha, 1);
  EXPECT_EQ(ab.beta, 7);
  EXPECT_THROW(alpha_beta(SparseSet(2), F, c, 7), HypothesisError);
}

TEST(Operators, PullbackAndSlices) {
  SparseFunction f(2);
  f.set({1, 5}, 2);
  f.set({-3, 0}, mpq_class(1, 2));
  const auto g = pullback(f, AffineTransform({Shear{1, 0, 2}}));
  // g(x) = f(Tx), T(x0, x1) = (x0, x1 - 2 x0)
  EXPECT_EQ(g.value({1, 7}), 2);
  EXPECT_EQ(g.value({-3, -6}), mpq_class(1, 2));
  const auto slices = dilation_slices(f, 0, 2);
  ASSERT_EQ(slices.size(), 2u);
  EXPECT_EQ(slices[1].value({0, 5}), 2);
  EXPECT_EQ(slices[1].value({-2, 0}), mpq_class(1, 2));
  EXPECT_THROW(pullback(f, AffineTransform({Dilation{{2, 1}}})), HypothesisError);
}

TEST(SetIO, RoundTripAndErrors) {
  std::istringstream in("# comment\n1 2\n\n-3 4  # tail\n");
  const SparseSet s = read_set(in);
  EXPECT_EQ(s.size(), 2u);
  std::ostringstream out;
  write_set(out, s);
  std::istringstream again(out.str());
  EXPECT_EQ(read_set(again), s);

  std::istringstream bad("1 2\n3\n");
  try {
    read_set(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  std::istringstream fn("0 0 1/2\n1 1 -3\n");
  const SparseFunction f = read_function(fn);
  EXPECT_EQ(f.value({0, 0}), mpq_class(1, 2));
  EXPECT_EQ(f.value({1, 1}), -3);
}
