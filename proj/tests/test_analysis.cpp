#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lpi/analysis.hpp"
#include "lpi/errors.hpp"

using namespace lpi;

namespace {

SparseFunction random_function(std::mt19937_64& rng, std::size_t d, int support) {
  SparseFunction f(d);
  for (int i = 0; i < support; ++i) {
    LatticePoint p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = static_cast<std::int64_t>(rng() % 21) - 10;
    f.add(p, rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 5)));
  }
  return f;
}

}  // namespace

TEST(Extremizers, DiracAndDualRatiosAreExact) {
  const Curve c = Curve::moment(2);
  const ExponentPair e = ExponentPair::from_pq(2, 4);
  for (std::int64_t N = 4; N <= 16; ++N) {
    const auto d = make_extremizer(ExtremizerKind::dirac, c, N);
    EXPECT_EQ(set_size(d.E), 1);
    EXPECT_EQ(set_size(d.F), N);
    const RwtRatio rd = rwt_ratio_exact(d.E, d.F, e, c, N);
    EXPECT_EQ(rd.pairing, 1);
    EXPECT_TRUE(rd.equals_power_of(N, -e.inv_q_dual()));
    const auto u = make_extremizer(ExtremizerKind::curve_image_dual, c, N);
    const RwtRatio ru = rwt_ratio_exact(u.E, u.F, e, c, N);
    EXPECT_TRUE(ru.equals_power_of(N, -e.inv_p()));
    EXPECT_FALSE(ru.equals_power_of(N, -e.inv_q_dual()));
  }
}

TEST(Extremizers, BoxSizes) {
  const Curve c = Curve::moment(2);
  const auto b = make_extremizer(ExtremizerKind::parabolic_box, c, 4);
  EXPECT_EQ(set_size(b.E), 9 * 33);
  const auto h = make_extremizer(ExtremizerKind::parabolic_box, c, 4, mpq_class(1, 2));
  EXPECT_EQ(set_size(h.F), 5 * 17);
  EXPECT_EQ(parse_extremizer_kind("box"), ExtremizerKind::parabolic_box);
  EXPECT_EQ(parse_extremizer_kind("dual"), ExtremizerKind::curve_image_dual);
  EXPECT_THROW(parse_extremizer_kind("blob"), ParseError);
}

TEST(Fit, RecoversPowerLaw) {
  std::vector<std::pair<std::int64_t, Real>> v;
  for (std::int64_t N : {4, 8, 16, 32, 64}) v.emplace_back(N, 3 * pow(Real(N), Real(-0.75)));
  const FitResult f = fit_exponent(v);
  EXPECT_NEAR(f.slope, -0.75, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-9);
  EXPECT_LT(f.max_residual, 1e-12);
  std::vector<std::pair<std::int64_t, Real>> flat = {{2, Real(5)}, {3, Real(5)}, {9, Real(5)}};
  EXPECT_NEAR(fit_exponent(flat).slope, 0.0, 1e-12);
  EXPECT_THROW(fit_exponent({{2, Real(1)}, {3, Real(1)}}), HypothesisError);
  EXPECT_THROW(fit_exponent({{2, Real(1)}, {3, Real(0)}, {4, Real(1)}}), HypothesisError);
}

TEST(MomentNorm, FirstMoment) {
  const Curve c = Curve::moment(2);
  for (std::int64_t N : {3, 10, 25}) {
    const double v = moment_norm(c, 1, N).convert_to<double>();
    EXPECT_NEAR(v, 1.0 / std::sqrt(static_cast<double>(N)), 1e-12);
  }
}

TEST(Riesz, LabelsAgreeWithClassifier) {
  const Curve c = Curve::moment(3);
  const RieszTable t = riesz_diagram_data(c, 6);
  ASSERT_EQ(t.rows.size(), 7u * 7u + 1u);
  for (const auto& row : t.rows) {
    const ExponentPair e(row.inv_p, row.inv_q);
    EXPECT_EQ(row.region, classify_exponents(c, e));
    EXPECT_EQ(row.dominant, dominant_term(c.total_degree(), e));
  }
  EXPECT_EQ(t.rows.back().inv_p, 1 / critical_exponent(c));
  EXPECT_EQ(t.rows.back().region, Region::critical_boundary);
  EXPECT_EQ(t.to_csv().substr(0, t.to_csv().find('\n')).find("inv_p"), 0u);
}

TEST(Identities, ShearAndDilation) {
  std::mt19937_64 rng(3);
  const Curve c = Curve::moment(2);
  for (int t = 0; t < 8; ++t) {
    const SparseFunction f = random_function(rng, 2, 12);
    for (unsigned q : {2u, 3u}) {
      const Shear s{1, 0, mpz_class(static_cast<long>(rng() % 7) - 3)};
      const NormIdentity a = shear_transport(c, s, 6, f, q);
      EXPECT_TRUE(a.holds()) << a.lhs << " vs " << a.rhs;
      const NormIdentity b = dilation_decomposition(c, t % 2, 2 + t % 3, 5, f, q);
      EXPECT_TRUE(b.holds()) << b.lhs << " vs " << b.rhs;
    }
  }
  const Curve line = parse_curve("n^2");
  const SparseFunction g = random_function(rng, 1, 8);
  EXPECT_TRUE(dilation_decomposition(line, 0, 3, 7, g, 2).holds());
}

TEST(Scan, WitnessesBoundTheMaximum) {
  const Curve c = Curve::moment(2);
  const std::vector<std::int64_t> Ns = {4, 6, 8};
  const ScanReport r = theorem_consistency_scan(TheoremCase::ii, c, Ns, 2, 11);
  EXPECT_EQ(r.theta, mpq_class(3, 5));
  ASSERT_EQ(r.max_ratio.size(), Ns.size());
  for (std::size_t i = 0; i < Ns.size(); ++i) EXPECT_GT(r.max_ratio[i], 0);
  const ScanReport again = theorem_consistency_scan(TheoremCase::ii, c, Ns, 2, 11, 1);
  EXPECT_EQ(r.max_ratio, again.max_ratio);
  EXPECT_EQ(parse_theorem_case("iii"), TheoremCase::iii);
  EXPECT_THROW(parse_theorem_case("iv"), ParseError);
}
