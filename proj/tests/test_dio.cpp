#include <random>

#include <gtest/gtest.h>

#include "lpi/analysis.hpp"
#include "lpi/count.hpp"
#include "lpi/divisors.hpp"
#include "lpi/errors.hpp"
#include "lpi/multi_poly.hpp"
#include "oracles.hpp"

using namespace lpi;

TEST(Divisors, Basics) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(-7), (std::vector<std::int64_t>{1, 7}));
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_THROW(divisors(0), HypothesisError);
}

TEST(Divisors, CountMatchesSieve) {
  const std::int64_t L = 1'000'000;
  std::vector<std::int32_t> tau(L + 1, 0);
  for (std::int64_t d = 1; d <= L; ++d)
    for (std::int64_t m = d; m <= L; m += d) ++tau[m];
  for (std::int64_t n = 1; n <= L; n += 997) ASSERT_EQ(divisor_count(n), tau[n]) << n;
  for (std::int64_t n = L - 200; n <= L; ++n) ASSERT_EQ(divisor_count(n), tau[n]) << n;
}

TEST(Divisors, OrderedFactorizations) {
  const auto f = ordered_factorizations(3, 2);
  ASSERT_EQ(f.size(), 4u);
  for (const auto& t : f) EXPECT_EQ(t[0] * t[1], 3);
  for (std::int64_t z : {-12, 7, 30, -1}) {
    const auto g = ordered_factorizations(z, 3);
    std::int64_t expected = 0;
    for (std::int64_t a = -std::abs(z); a <= std::abs(z); ++a)
      for (std::int64_t b = -std::abs(z); b <= std::abs(z); ++b)
        if (a && b && z % (a * b) == 0) ++expected;
    EXPECT_EQ(static_cast<std::int64_t>(g.size()), expected) << z;
    for (const auto& t : g) EXPECT_EQ(t[0] * t[1] * t[2], z);
  }
  EXPECT_THROW(ordered_factorizations(0, 2), HypothesisError);
}

TEST(DifferenceQuotient, Squares) {
  const auto dq = difference_quotient(parse_poly("n^2"));
  // X^2-Y^2+Z^2-(X-Y+Z)^2 = 2 (X-Y)(Y-Z); at (2,1,0) both sides are 2
  EXPECT_EQ(dq.q3.to_string(), "2");
  EXPECT_GE(dq.certified_points, 64);
}

TEST(DifferenceQuotient, Cubes) {
  const auto dq = difference_quotient(parse_poly("n^3"));
  std::array<mpz_class, 3> at{5, -2, 7};
  EXPECT_EQ(dq.q3.eval(at), 3 * (5 + 7));
  EXPECT_EQ(dq.q2.eval({4, 9, 0}), 16 + 36 + 81);
  EXPECT_THROW(difference_quotient(parse_poly("2n+1")), HypothesisError);
}

TEST(DifferenceQuotient, IdentityOnGrid) {
  for (const char* t : {"2n^3-n", "n^4+n", "n^5-3n^2"}) {
    const IntPoly P = parse_poly(t);
    const auto dq = difference_quotient(P);
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y)
        for (long z = -3; z <= 3; ++z) {
          const mpz_class X = x, Y = y, Z = z;
          EXPECT_EQ(P.eval(X) - P.eval(Y), dq.q2.eval({X, Y, 0}) * (X - Y));
          EXPECT_EQ(P.eval(X) - P.eval(Y) + P.eval(Z) - P.eval(X - Y + Z), dq.q3.eval({X, Y, Z}) * (X - Y) * (Y - Z));
        }
  }
}

TEST(Counts, HomogeneousSmall) {
  const Curve n = parse_curve("n");
  EXPECT_EQ(count_homogeneous(n, 2, 2, CountMethod::brute).count, 6);
  EXPECT_EQ(count_homogeneous(n, 2, 2, CountMethod::mitm).count, 6);
  const oracle::Curve cubes = {{0, 0, 0, 1}};
  EXPECT_EQ(count_homogeneous(parse_curve("n^3"), 2, 12, CountMethod::mitm).count, oracle::J(cubes, 2, 12));
}

TEST(Counts, SerialAndParallelAgree) {
  CountOptions ser, par;
  ser.exec = Exec::serial;
  par.exec = Exec::parallel;
  par.threads = 4;
  const Curve c = Curve::moment(2);
  for (auto m : {CountMethod::brute, CountMethod::mitm})
    EXPECT_EQ(count_homogeneous(c, 2, 9, m, ser).count, count_homogeneous(c, 2, 9, m, par).count);
  EXPECT_EQ(max_inhomogeneous(c, 2, 10, ser).count, max_inhomogeneous(c, 2, 10, par).count);
  EXPECT_EQ(max_inhomogeneous(c, 2, 10, ser).z, max_inhomogeneous(c, 2, 10, par).z);
}

TEST(Counts, InhomogeneousMatchesOracle) {
  const Curve c = Curve::moment(2);
  const auto h = oracle::difference_histogram({{0, 1}, {0, 0, 1}}, 2, 5);
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -20; b <= 20; b += 3) {
      const auto want = oracle::count(h, {a, b});
      EXPECT_EQ(count_inhomogeneous(c, 2, 5, {a, b}, CountMethod::brute).count, want);
      EXPECT_EQ(count_inhomogeneous(c, 2, 5, {a, b}, CountMethod::mitm).count, want);
    }
}

TEST(Counts, MaxInhomogeneousMatchesOracle) {
  for (const char* text : {"n^2", "n,n^2", "n,n^2,n^3"}) {
    const Curve c = parse_curve(text);
    oracle::Curve oc;
    for (const auto& p : c.components()) {
      oracle::Poly q;
      for (int i = 0; i <= p.degree(); ++i) q.push_back(p.coeff(i).get_si());
      oc.push_back(q);
    }
    for (int k : {1, 2}) {
      const auto h = oracle::difference_histogram(oc, k, 5);
      std::int64_t best = 0;
      oracle::Point arg;
      for (const auto& [z, w] : h) {
        bool zero = true;
        for (auto v : z) zero = zero && v == 0;
        if (!zero && w > best) {
          best = w;
          arg = z;
        }
      }
      const auto m = max_inhomogeneous(c, k, 5);
      EXPECT_EQ(m.count, best) << text << " k=" << k;
      oracle::Point got(m.z.coords().begin(), m.z.coords().end());
      EXPECT_EQ(oracle::count(h, got), best);
    }
  }
}

TEST(Counts, MaxInhomogeneousOnCubicMomentCurve) {
  const Curve c = Curve::moment(3);
  for (int k : {1, 2}) {
    std::vector<std::pair<std::int64_t, Real>> v;
    for (std::int64_t N : {8, 16, 32, 64}) {
      const std::int64_t m = max_inhomogeneous(c, k, N).count;
      // count(z) <= J by Cauchy-Schwarz; for k <= 3 J is the diagonal count
      EXPECT_LT(m, count_homogeneous(c, k, N, CountMethod::mitm).count) << "k=" << k << " N=" << N;
      v.emplace_back(N, Real(m));
    }
    EXPECT_LE(fit_exponent(v).slope, k - 0.5) << "k=" << k;
  }
}

TEST(Counts, BudgetIsEnforced) {
  CountOptions o;
  o.budget_tuples = 1000;
  EXPECT_THROW(count_homogeneous(Curve::moment(2), 3, 10, CountMethod::brute, o), BudgetExceeded);
}

TEST(Counts, RecordJsonRoundTrip) {
  CountRecord r = count_inhomogeneous(Curve::moment(2), 2, 6, {1, 5}, CountMethod::mitm);
  const CountRecord back = CountRecord::from_json_line(r.to_json_line());
  EXPECT_EQ(back.count, r.count);
  EXPECT_EQ(back.cache_key(), r.cache_key());
  EXPECT_EQ(back.z, r.z);
  EXPECT_THROW(CountRecord::from_json_line("{\"curve\":1}"), ParseError);
}

TEST(Lemmas, Lemma1AgainstOracle) {
  for (const char* t : {"n^2", "n^3", "n^2+n", "2n^3-n"}) {
    const IntPoly P = parse_poly(t);
    const auto h = oracle::difference_histogram({[&] {
                                                  oracle::Poly q;
                                                  for (int i = 0; i <= P.degree(); ++i) q.push_back(P.coeff(i).get_si());
                                                  return q;
                                                }()},
                                                1, 7);
    const Lemma1Counter L(P, 7);
    for (std::int64_t z = -200; z <= 200; ++z)
      if (z != 0) ASSERT_EQ(L.count(z), oracle::count(h, {z})) << t << " z=" << z;
  }
  EXPECT_THROW(count_lemma1(parse_poly("n^2"), 0, 5), HypothesisError);
}

TEST(Lemmas, OutsideHypothesisIsFlagged) {
  EXPECT_FALSE(count_lemma1(parse_poly("n^2"), 10, 5).outside_hypothesis);
  EXPECT_TRUE(count_lemma1(parse_poly("n^2"), 1000, 5).outside_hypothesis);
}

TEST(Lemmas, Lemma2AgainstOracle) {
  const auto h = oracle::difference_histogram({{0, 1}, {0, 0, 0, 1}}, 2, 5);
  const Lemma2Counter L(parse_poly("n^3"), 5);
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -250; b <= 250; ++b) {
      if (a == 0 && b == 0) continue;
      ASSERT_EQ(L.count(a, b), oracle::count(h, {a, b})) << a << "," << b;
    }
}

TEST(Lemmas, Lemma3CellsAreConsistent) {
  const Lemma3Counter L(5);
  std::vector<FactorCell> cells;
  Lemma3Stats st;
  const std::int64_t n = L.count(1, 5, 19, &st, &cells);  // e.g. (1,2,3) vs (1,1,2) shifted
  EXPECT_EQ(static_cast<std::int64_t>(cells.size()), n);
  for (const auto& c : cells) EXPECT_TRUE(c.consistent(1, 5, 19));
  EXPECT_GT(st.cells, 0);
  const auto h = oracle::difference_histogram({{0, 1}, {0, 0, 1}, {0, 0, 0, 1}}, 3, 5);
  EXPECT_EQ(n, oracle::count(h, {1, 5, 19}));
  EXPECT_THROW(L.count(0, 0, 0), HypothesisError);
}
